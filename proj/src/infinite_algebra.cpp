#include "hns/infinite_algebra.hpp"

#include "hns/errors.hpp"

#include <string>

namespace hns {

namespace {

template <class Domain>
void require_index(std::int64_t n) {
  if (!Domain::admits(n))
    throw PreconditionError(std::string(Domain::name) + ": index " + std::to_string(n) +
                            " is out of domain");
}

}  // namespace

template <class Domain>
FormalSum<Domain>::FormalSum(std::initializer_list<std::pair<const index_type, Rational>> terms) {
  for (const auto& [n, c] : terms) accumulate(n, c);
}

template <class Domain>
FormalSum<Domain>::FormalSum(const map_type& terms) {
  for (const auto& [n, c] : terms) accumulate(n, c);
}

template <class Domain>
Rational FormalSum<Domain>::coefficient(index_type n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

template <class Domain>
Rational FormalSum<Domain>::mass() const {
  Rational total = 0;
  for (const auto& [n, c] : terms_) total += c;
  return total;
}

template <class Domain>
void FormalSum<Domain>::accumulate(index_type n, const Rational& c) {
  require_index<Domain>(n);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

template class FormalSum<IntegerIndices>;
template class FormalSum<NaturalIndices>;

ZElement z_delta(std::int64_t n) { return ZElement{{n, Rational(1)}}; }

ZElement z_convolve(const ZElement& a, const ZElement& b) {
  ZElement out;
  for (const auto& [n, x] : a.terms())
    for (const auto& [m, y] : b.terms()) out.accumulate(n + m, x * y);
  return out;
}

ZElement z_involute(const ZElement& a) {
  ZElement out;
  for (const auto& [n, c] : a.terms()) out.accumulate(-n, c);
  return out;
}

ZElement symmetrize(const ZElement& a) {
  return Rational(1, 2) * (a + z_involute(a));
}

bool is_reflection_invariant(const ZElement& a) { return z_involute(a) == a; }

GammaElement fold(const ZElement& a) {
  if (!is_reflection_invariant(a))
    throw PreconditionError("fold: input is not invariant under n -> -n; symmetrize it first");
  GammaElement out;
  for (const auto& [n, c] : a.terms()) out.accumulate(n < 0 ? -n : n, c);
  return out;
}

GammaElement gamma_delta(std::int64_t n) {
  require_index<NaturalIndices>(n);
  return GammaElement{{n, Rational(1)}};
}

GammaElement gamma_convolve(const GammaElement& a, const GammaElement& b) {
  const Rational half(1, 2);
  GammaElement out;
  for (const auto& [n, x] : a.terms()) {
    for (const auto& [m, y] : b.terms()) {
      const Rational w = half * x * y;
      out.accumulate(n + m, w);
      out.accumulate(n >= m ? n - m : m - n, w);
    }
  }
  return out;
}

}  // namespace hns
