#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "sepdfa/word.hpp"

namespace sepdfa {

/// Labelled finite words. Every word not listed is implicitly don't-care.
///
/// The two sets are public so that callers can build sets freely;
/// sort_and_validate() is the gate that rejects a word carrying both labels.
struct SampleSet {
  std::size_t alphabet_size = 0;
  std::set<Word, LexLess> positives;
  std::set<Word, LexLess> negatives;

  /// Inserts `w` with `label` (Positive or Negative). Throws ParseError if the
  /// word already carries the other label or a letter is out of range.
  void add(Word w, Label label);

  std::size_t size() const { return positives.size() + negatives.size(); }
  bool empty() const { return positives.empty() && negatives.empty(); }

  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

struct Sample {
  Word word;
  Label label;

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Samples in strictly ascending lex order, no duplicates, labels in {+, -}.
/// Only sort_and_validate() produces one.
class OrderedSampleSet {
 public:
  OrderedSampleSet() = default;

  std::size_t alphabet_size() const { return alphabet_size_; }
  const std::vector<Sample>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// The subset carrying `label`, relabelled positive. Used to build the two
  /// halves of a double DFA.
  OrderedSampleSet only(Label label) const;

 private:
  friend OrderedSampleSet sort_and_validate(std::size_t, std::vector<Sample>);
  std::size_t alphabet_size_ = 0;
  std::vector<Sample> entries_;
};

/// Sorts by lex_compare, collapses identical duplicates, and throws
/// ParseError on a word listed with both labels.
OrderedSampleSet sort_and_validate(std::size_t alphabet_size, std::vector<Sample> samples);
OrderedSampleSet sort_and_validate(const SampleSet& set);

Label classify(const SampleSet& set, const Word& w);

/// Abbadingo format: "<count> <alphabet>\n" then "<label> <len> <letters...>\n"
/// per sample, label 1 = positive, 0 = negative.
SampleSet parse_abbadingo(std::istream& in);
SampleSet parse_abbadingo(std::string_view text);

/// Emits samples in lex order with positives and negatives interleaved.
void write_abbadingo(std::ostream& out, const SampleSet& set);
std::string write_abbadingo(const SampleSet& set);

SampleSet read_abbadingo_file(const std::string& path);
void write_abbadingo_file(const std::string& path, const SampleSet& set);

}  // namespace sepdfa
