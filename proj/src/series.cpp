#include "hcbim/series.hpp"

namespace hcbim {

MomentSequence<Complex> to_approx(const MomentSequence<Rational>& d) {
  MomentSequence<Complex> out{d.kind, {}};
  out.values.reserve(d.values.size());
  for (const auto& v : d.values) out.values.push_back(to_complex(v));
  return out;
}

TaylorSeq<Complex> to_approx(const TaylorSeq<Rational>& t) {
  TaylorSeq<Complex> out;
  out.coeffs.reserve(t.coeffs.size());
  for (const auto& v : t.coeffs) out.coeffs.push_back(to_complex(v));
  return out;
}

}  // namespace hcbim
