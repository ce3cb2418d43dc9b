// Tied braid words and the combinatorics of their closures.
//
// Conventions:
//  * Letter indices are 1-based, as in the text format: Sig(i, +-1) is the
//    crossing sigma_i^{+-1} of the strands at positions i and i+1, Tie(i)
//    ties those two strands.
//  * Strand positions, components and classes are 0-based internally and
//    rendered 1-based.
//  * The permutation of a word is s_{i1} * s_{i2} * ... in word order,
//    composed as functions (see Perm).  Components of the closure are its
//    cycles; component ids are ordered by least strand.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btinv/set_partition.hpp"

namespace btinv {

struct Letter {
  enum class Kind : std::uint8_t { sig, tie };
  Kind kind = Kind::sig;
  int index = 1;
  int sign = 1;  // +-1 for crossings, +1 for ties

  static Letter sig(int i, int sign = 1) { return {Kind::sig, i, sign}; }
  static Letter tie(int i) { return {Kind::tie, i, 1}; }
  bool is_sig() const { return kind == Kind::sig; }
  bool is_tie() const { return kind == Kind::tie; }
  /// "s2", "s2^-1", "e2".
  std::string render() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string token, const std::string& message);
  int line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  std::string token_;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TiedBraidWord {
  std::string name;
  int strands = 1;
  std::vector<Letter> letters;
  /// Ties among the bottom positions, applied after the word.
  std::optional<SetPartition> top_ties;

  /// Throws ValidationError on out-of-range indices or a mis-sized top_ties.
  void validate() const;
  int exponent_sum() const;
  bool has_ties() const;
  Perm permutation() const;
  /// Text format (round-trips through parse()).
  std::string render() const;
  friend bool operator==(const TiedBraidWord&, const TiedBraidWord&) = default;
};

/// Parses the line-oriented link file format:
///   # comment
///   name: <text>        (optional)
///   strands: <n>        (required)
///   word: <tokens>      (required; tokens s<k>, s<k>^-1, e<k>, single spaces)
///   ties: {i,j,...}{..} (optional; 1-based strand positions)
TiedBraidWord parse_word(const std::string& text);
TiedBraidWord read_word_file(const std::string& path);

/// Weighted edge of a (c-)linking graph, vertices 0-based.
struct GraphEdge {
  int from = 0;
  int to = 0;
  long weight = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct CLinkingGraph {
  int vertices = 0;
  std::vector<GraphEdge> edges;  // from < to, weight != 0, sorted
  bool is_connected() const;
  friend bool operator==(const CLinkingGraph&, const CLinkingGraph&) = default;
};

struct LinkingData {
  int components = 0;                         // m
  std::vector<int> component_of_strand;       // top position -> component
  std::vector<std::vector<long>> linking;     // symmetric, zero diagonal
  SetPartition classes;                       // partition of components
  CLinkingGraph class_graph;

  int class_count() const { return classes.num_blocks(); }
  /// Sum of linking numbers between the components of two classes.
  long class_linking(int x, int y) const;
};

/// Components of the closure (only components/component_of_strand filled).
LinkingData closure_components(const TiedBraidWord& w);
/// Linking matrix of the closure.
std::vector<std::vector<long>> linking_matrix(const TiedBraidWord& w);
/// Partition of components induced by Tie letters and top ties.
SetPartition class_partition(const TiedBraidWord& w);
CLinkingGraph clinking_graph(const LinkingData& data);
CLinkingGraph clinking_graph(const TiedBraidWord& w);
/// All of the above.
LinkingData linking_data(const TiedBraidWord& w);

/// Same word with every strand tied at the bottom.
TiedBraidWord tie_all(const TiedBraidWord& w);

}  // namespace btinv
