#include "sepdfa/sample_store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sepdfa/error.hpp"

namespace sepdfa {

char label_symbol(Label label) {
  switch (label) {
    case Label::Positive: return '+';
    case Label::Negative: return '-';
    case Label::DontCare: return '?';
  }
  return '?';
}

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

void SampleSet::add(Word w, Label label) {
  for (Letter a : w)
    if (a >= alphabet_size)
      throw ParseError("letter " + std::to_string(a) + " outside alphabet of size " +
                       std::to_string(alphabet_size));
  if (label == Label::DontCare) throw ParseError("don't-care words are not stored explicitly");
  auto& mine = label == Label::Positive ? positives : negatives;
  auto& other = label == Label::Positive ? negatives : positives;
  if (other.contains(w)) throw ParseError("word [" + to_string(w) + "] carries both labels");
  mine.insert(std::move(w));
}

OrderedSampleSet OrderedSampleSet::only(Label label) const {
  OrderedSampleSet out;
  out.alphabet_size_ = alphabet_size_;
  for (const auto& s : entries_)
    if (s.label == label) out.entries_.push_back({s.word, Label::Positive});
  return out;
}

OrderedSampleSet sort_and_validate(std::size_t alphabet_size, std::vector<Sample> samples) {
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return lex_compare(a.word, b.word) < 0; });
  OrderedSampleSet out;
  out.alphabet_size_ = alphabet_size;
  out.entries_.reserve(samples.size());
  for (auto& s : samples) {
    if (s.label == Label::DontCare) throw ParseError("don't-care label in sample list");
    for (Letter a : s.word)
      if (a >= alphabet_size) throw ParseError("letter outside alphabet in [" + to_string(s.word) + "]");
    if (!out.entries_.empty() && out.entries_.back().word == s.word) {
      if (out.entries_.back().label != s.label)
        throw ParseError("word [" + to_string(s.word) + "] carries both labels");
      continue;
    }
    out.entries_.push_back(std::move(s));
  }
  return out;
}

OrderedSampleSet sort_and_validate(const SampleSet& set) {
  std::vector<Sample> samples;
  samples.reserve(set.size());
  for (const auto& w : set.positives) samples.push_back({w, Label::Positive});
  for (const auto& w : set.negatives) samples.push_back({w, Label::Negative});
  return sort_and_validate(set.alphabet_size, std::move(samples));
}

Label classify(const SampleSet& set, const Word& w) {
  if (set.positives.contains(w)) return Label::Positive;
  if (set.negatives.contains(w)) return Label::Negative;
  return Label::DontCare;
}

namespace {

// Splits on single spaces; an empty field (double space, leading or trailing
// space) is a format error.
std::vector<std::string_view> split_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    std::string_view field = line.substr(start, pos == std::string_view::npos ? pos : pos - start);
    if (field.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty field");
    fields.push_back(field);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(field) +
                     "' is not a non-negative integer");
  return value;
}

}  // namespace

SampleSet parse_abbadingo(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError("missing header line");

  auto header = split_fields(lines[0], 1);
  if (header.size() != 2) throw ParseError("header must be '<sample_count> <alphabet_size>'");
  const std::uint64_t count = parse_number(header[0], 1);
  SampleSet set;
  set.alphabet_size = parse_number(header[1], 1);

  if (lines.size() - 1 != count)
    throw ParseError("header declares " + std::to_string(count) + " samples but file has " +
                     std::to_string(lines.size() - 1));

  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i], i + 1);
    if (fields.size() < 2) throw ParseError("line " + std::to_string(i + 1) + ": missing label or length");
    const auto label = parse_number(fields[0], i + 1);
    if (label > 1) throw ParseError("line " + std::to_string(i + 1) + ": label must be 0 or 1");
    const auto length = parse_number(fields[1], i + 1);
    if (fields.size() - 2 != length)
      throw ParseError("line " + std::to_string(i + 1) + ": declared length " + std::to_string(length) +
                       " but " + std::to_string(fields.size() - 2) + " symbols");
    Word w;
    w.reserve(length);
    for (std::size_t k = 2; k < fields.size(); ++k) {
      auto a = parse_number(fields[k], i + 1);
      if (a >= set.alphabet_size)
        throw ParseError("line " + std::to_string(i + 1) + ": symbol " + std::to_string(a) +
                         " >= alphabet size " + std::to_string(set.alphabet_size));
      w.push_back(static_cast<Letter>(a));
    }
    set.add(std::move(w), label == 1 ? Label::Positive : Label::Negative);
  }
  return set;
}

SampleSet parse_abbadingo(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_abbadingo(std::string_view(buffer.str()));
}

void write_abbadingo(std::ostream& out, const SampleSet& set) {
  out << set.size() << ' ' << set.alphabet_size << '\n';
  auto pos = set.positives.begin();
  auto neg = set.negatives.begin();
  auto emit = [&out](const Word& w, int label) {
    out << label << ' ' << w.size();
    for (Letter a : w) out << ' ' << a;
    out << '\n';
  };
  while (pos != set.positives.end() || neg != set.negatives.end()) {
    if (neg == set.negatives.end() || (pos != set.positives.end() && lex_compare(*pos, *neg) < 0))
      emit(*pos++, 1);
    else
      emit(*neg++, 0);
  }
}

std::string write_abbadingo(const SampleSet& set) {
  std::ostringstream out;
  write_abbadingo(out, set);
  return out.str();
}

SampleSet read_abbadingo_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return parse_abbadingo(in);
}

void write_abbadingo_file(const std::string& path, const SampleSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_abbadingo(out, set);
}

}  // namespace sepdfa
