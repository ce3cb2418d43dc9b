#include "btinv/tiedbraid.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace btinv {

std::string Letter::render() const {
  if (is_tie()) return "e" + std::to_string(index);
  return "s" + std::to_string(index) + (sign < 0 ? "^-1" : "");
}

ParseError::ParseError(int line, std::string token, const std::string& message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + message +
                         (token.empty() ? "" : " (token '" + token + "')")),
      line_(line),
      token_(std::move(token)) {}

void TiedBraidWord::validate() const {
  if (strands < 1 || strands > kMaxStrands) {
    throw ValidationError("strand count out of range: " + std::to_string(strands));
  }
  for (const auto& l : letters) {
    if (l.index < 1 || l.index > strands - 1) {
      throw ValidationError("index out of range: " + l.render() + " on " + std::to_string(strands) +
                            " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw ValidationError("bad crossing sign");
  }
  if (top_ties && top_ties->size() != strands) throw ValidationError("ties partition has wrong size");
}

int TiedBraidWord::exponent_sum() const {
  int e = 0;
  for (const auto& l : letters) {
    if (l.is_sig()) e += l.sign;
  }
  return e;
}

bool TiedBraidWord::has_ties() const {
  if (top_ties && !top_ties->is_discrete()) return true;
  return std::any_of(letters.begin(), letters.end(), [](const Letter& l) { return l.is_tie(); });
}

Perm TiedBraidWord::permutation() const {
  Perm w(strands);
  for (const auto& l : letters) {
    if (l.is_sig()) w = w.times_simple(l.index);
  }
  return w;
}

std::string TiedBraidWord::render() const {
  std::ostringstream out;
  if (!name.empty()) out << "name: " << name << '\n';
  out << "strands: " << strands << '\n';
  out << "word:";
  for (const auto& l : letters) out << ' ' << l.render();
  out << '\n';
  if (top_ties && !top_ties->is_discrete()) {
    out << "ties: ";
    for (const auto& block : top_ties->blocks()) {
      if (block.size() < 2) continue;
      out << '{';
      for (std::size_t k = 0; k < block.size(); ++k) out << (k ? "," : "") << block[k] + 1;
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

namespace {

bool parse_positive(const std::string& digits, int& value) {
  if (digits.empty() || digits.size() > 4 || digits[0] == '0') return false;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') return false;
  }
  value = std::stoi(digits);
  return true;
}

Letter parse_letter(const std::string& token, int line) {
  if (token.empty()) throw ParseError(line, token, "empty token (tokens are separated by single spaces)");
  char head = token[0];
  if (head != 's' && head != 'e') throw ParseError(line, token, "malformed token");
  std::string rest = token.substr(1);
  int sign = 1;
  if (head == 's' && rest.size() > 3 && rest.compare(rest.size() - 3, 3, "^-1") == 0) {
    sign = -1;
    rest.resize(rest.size() - 3);
  }
  int index = 0;
  if (!parse_positive(rest, index)) throw ParseError(line, token, "malformed token");
  return head == 's' ? Letter::sig(index, sign) : Letter::tie(index);
}

std::vector<std::vector<int>> parse_ties(const std::string& text, int line) {
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '{') throw ParseError(line, text.substr(pos), "expected '{' in ties");
    std::size_t close = text.find('}', pos);
    if (close == std::string::npos) throw ParseError(line, text.substr(pos), "unterminated block in ties");
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> block;
    std::stringstream items(body);
    std::string item;
    while (std::getline(items, item, ',')) {
      int value = 0;
      if (!parse_positive(item, value)) throw ParseError(line, item, "malformed strand index in ties");
      block.push_back(value);
    }
    if (block.empty()) throw ParseError(line, "{}", "empty block in ties");
    blocks.push_back(std::move(block));
    pos = close + 1;
  }
  return blocks;
}

}  // namespace

TiedBraidWord parse_word(const std::string& text) {
  TiedBraidWord w;
  std::optional<int> strands;
  std::optional<std::vector<std::pair<Letter, int>>> letters;  // letter, line
  std::optional<std::pair<std::vector<std::vector<int>>, int>> ties;
  bool have_name = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t')) raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError(line, raw, "expected 'key: value'");
    std::string key = raw.substr(0, colon);
    std::string value = raw.substr(colon + 1);
    if (!value.empty()) {
      if (value[0] != ' ') throw ParseError(line, raw, "expected a space after ':'");
      value.erase(0, 1);
    }
    if (key == "name") {
      if (have_name) throw ParseError(line, key, "duplicate key");
      have_name = true;
      w.name = value;
    } else if (key == "strands") {
      if (strands) throw ParseError(line, key, "duplicate key");
      int n = 0;
      if (!parse_positive(value, n)) throw ParseError(line, value, "malformed strand count");
      if (n > kMaxStrands) throw ParseError(line, value, "too many strands");
      strands = n;
    } else if (key == "word") {
      if (letters) throw ParseError(line, key, "duplicate key");
      letters.emplace();
      if (!value.empty()) {
        std::size_t start = 0;
        while (true) {
          std::size_t space = value.find(' ', start);
          std::string token = value.substr(start, space == std::string::npos ? std::string::npos : space - start);
          letters->emplace_back(parse_letter(token, line), line);
          if (space == std::string::npos) break;
          start = space + 1;
        }
      }
    } else if (key == "ties") {
      if (ties) throw ParseError(line, key, "duplicate key");
      ties.emplace(parse_ties(value, line), line);
    } else {
      throw ParseError(line, key, "unknown key");
    }
  }
  if (!strands) throw ParseError(line, "", "missing 'strands:' header");
  if (!letters) throw ParseError(line, "", "missing 'word:' line");
  w.strands = *strands;
  for (const auto& [letter, at] : *letters) {
    if (letter.index > w.strands - 1) throw ParseError(at, letter.render(), "index out of range");
    w.letters.push_back(letter);
  }
  if (ties) {
    auto& [blocks, at] = *ties;
    std::vector<bool> seen(w.strands, false);
    for (auto& block : blocks) {
      for (int& x : block) {
        if (x > w.strands) throw ParseError(at, std::to_string(x), "tie index out of range");
        if (seen[x - 1]) throw ParseError(at, std::to_string(x), "ties blocks are not disjoint");
        seen[x - 1] = true;
        --x;
      }
    }
    w.top_ties = SetPartition::from_blocks(w.strands, blocks);
  }
  return w;
}

TiedBraidWord read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_word(buffer.str());
}

namespace {

// occupant[p] = top strand at position p after all letters.
std::vector<int> bottom_occupants(const TiedBraidWord& w) {
  std::vector<int> occupant(w.strands);
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const auto& l : w.letters) {
    if (l.is_sig()) std::swap(occupant[l.index - 1], occupant[l.index]);
  }
  return occupant;
}

}  // namespace

LinkingData closure_components(const TiedBraidWord& w) {
  w.validate();
  std::vector<int> occupant = bottom_occupants(w);
  // Top strand s ends at the bottom position p with occupant[p] = s and
  // the closure carries it back to top strand p.
  std::vector<int> next(w.strands);
  for (int p = 0; p < w.strands; ++p) next[occupant[p]] = p;
  LinkingData data;
  data.component_of_strand.assign(w.strands, -1);
  for (int s = 0; s < w.strands; ++s) {
    if (data.component_of_strand[s] >= 0) continue;
    for (int t = s; data.component_of_strand[t] < 0; t = next[t]) data.component_of_strand[t] = data.components;
    ++data.components;
  }
  return data;
}

std::vector<std::vector<long>> linking_matrix(const TiedBraidWord& w) {
  LinkingData comps = closure_components(w);
  int m = comps.components;
  std::vector<std::vector<long>> acc(m, std::vector<long>(m, 0));
  std::vector<int> occupant(w.strands);
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const auto& l : w.letters) {
    if (!l.is_sig()) continue;
    int p = comps.component_of_strand[occupant[l.index - 1]];
    int q = comps.component_of_strand[occupant[l.index]];
    if (p != q) {
      acc[p][q] += l.sign;
      acc[q][p] += l.sign;
    }
    std::swap(occupant[l.index - 1], occupant[l.index]);
  }
  for (auto& row : acc) {
    for (long& x : row) {
      if (x % 2 != 0) throw std::logic_error("odd inter-component crossing count");
      x /= 2;
    }
  }
  return acc;
}

SetPartition class_partition(const TiedBraidWord& w) {
  LinkingData comps = closure_components(w);
  SetPartition classes(comps.components);
  std::vector<int> occupant(w.strands);
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const auto& l : w.letters) {
    if (l.is_tie()) {
      classes = classes.join_pair(comps.component_of_strand[occupant[l.index - 1]],
                                  comps.component_of_strand[occupant[l.index]]);
    } else {
      std::swap(occupant[l.index - 1], occupant[l.index]);
    }
  }
  if (w.top_ties) {
    for (const auto& block : w.top_ties->blocks()) {
      for (std::size_t k = 1; k < block.size(); ++k) {
        classes = classes.join_pair(comps.component_of_strand[occupant[block[0]]],
                                    comps.component_of_strand[occupant[block[k]]]);
      }
    }
  }
  return classes;
}

long LinkingData::class_linking(int x, int y) const {
  long total = 0;
  for (int p = 0; p < components; ++p) {
    if (classes.block_of(p) != x) continue;
    for (int q = 0; q < components; ++q) {
      if (classes.block_of(q) == y) total += linking[p][q];
    }
  }
  return total;
}

CLinkingGraph clinking_graph(const LinkingData& data) {
  CLinkingGraph g;
  g.vertices = data.class_count();
  for (int x = 0; x < g.vertices; ++x) {
    for (int y = x + 1; y < g.vertices; ++y) {
      long l = data.class_linking(x, y);
      if (l != 0) g.edges.push_back({x, y, l});
    }
  }
  return g;
}

CLinkingGraph clinking_graph(const TiedBraidWord& w) { return linking_data(w).class_graph; }

LinkingData linking_data(const TiedBraidWord& w) {
  LinkingData data = closure_components(w);
  data.linking = linking_matrix(w);
  data.classes = class_partition(w);
  data.class_graph = clinking_graph(data);
  return data;
}

bool CLinkingGraph::is_connected() const {
  if (vertices == 0) return true;
  SetPartition p(vertices);
  for (const auto& e : edges) p = p.join_pair(e.from, e.to);
  return p.num_blocks() == 1;
}

TiedBraidWord tie_all(const TiedBraidWord& w) {
  TiedBraidWord r = w;
  r.top_ties = SetPartition::full(w.strands);
  return r;
}

}  // namespace btinv
