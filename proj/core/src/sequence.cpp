#include "freeclt/sequence.hpp"

#include <stdexcept>

namespace freeclt {

std::string to_string(SequenceKind kind) {
  return kind == SequenceKind::moments ? "moments" : "cumulants";
}

SequenceKind parse_sequence_kind(std::string_view text) {
  if (text == "moments") return SequenceKind::moments;
  if (text == "cumulants") return SequenceKind::cumulants;
  throw std::invalid_argument("unknown sequence kind '" + std::string(text) + "'");
}

Sequence::Sequence(Flavor flavor, SequenceKind kind, std::vector<QSqrt2> entries)
    : flavor_(flavor), kind_(kind), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("Sequence: length must be at least 1");
  }
}

Sequence Sequence::zeros(Flavor flavor, SequenceKind kind, std::size_t length) {
  return Sequence(flavor, kind, std::vector<QSqrt2>(length));
}

const QSqrt2& Sequence::at(std::size_t order) const {
  if (order < 1 || order > entries_.size()) {
    throw std::out_of_range("Sequence::at: order " + std::to_string(order) + " outside 1.." +
                            std::to_string(entries_.size()));
  }
  return entries_[order - 1];
}

bool Sequence::variance_nonnegative() const {
  if (entries_.size() < 2) return true;
  return (entries_[1] - entries_[0] * entries_[0]).sign() >= 0;
}

Sequence linear_combination(const QSqrt2& a, const Sequence& x, const QSqrt2& b, const Sequence& y) {
  if (x.flavor() != y.flavor() || x.kind() != y.kind() || x.length() != y.length()) {
    throw std::invalid_argument("linear_combination: incompatible sequences");
  }
  std::vector<QSqrt2> out;
  out.reserve(x.length());
  for (std::size_t i = 0; i < x.length(); ++i) {
    out.push_back(a * x.entries()[i] + b * y.entries()[i]);
  }
  return x.with_entries(std::move(out));
}

}  // namespace freeclt
