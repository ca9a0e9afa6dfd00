#include "check.hpp"
#include "pwitness/convert.hpp"

namespace pw {

namespace {

IndexSet to_pv1(const RatMatrix& m, const Witness& w) {
  switch (w.index()) {
    case 0: return std::get<PV1>(w).alpha;
    case 1: return pv2_to_pv1(m, std::get<PV2>(w).x);
    default: return pv3_to_pv1(m, w);
  }
}

Witness from_pv1(const RatMatrix& m, const IndexSet& alpha, WitnessKind target, const ConvertOptions& options) {
  switch (target) {
    case WitnessKind::PV1:
      return PV1{alpha};
    case WitnessKind::PV2:
      if (options.pv2_method == Pv2Method::Eigen && sgn(principal_minor(m, alpha)) < 0) {
        try {
          return PV2{pv1_to_pv2_eigen(m, alpha, options.eigen)};
        } catch (const IterationLimitError&) {
          // fall through to the exact route
        }
      }
      return PV2{pv1_to_pv2(m, alpha)};
    case WitnessKind::PV3:
      return pv1_to_pv3(m, alpha);
  }
  throw InternalError("unknown witness kind");
}

}  // namespace

Witness convert_witness(const RatMatrix& m, const Witness& w, WitnessKind target, const ConvertOptions& options,
                        const std::function<void(const Witness&)>& trace) {
  if (!verify_witness(m, w)) throw NotAWitnessError(tag_of(w) + " condition fails");
  if (trace) trace(w);
  if (kind_of(w) == target) return w;

  const IndexSet alpha = to_pv1(m, w);
  Witness out = PV1{alpha};
  if (target != WitnessKind::PV1) {
    if (trace) trace(out);
    out = from_pv1(m, alpha, target, options);
  }
  PW_ENSURE(verify_witness(m, out), "converted witness does not verify");
  if (trace) trace(out);
  return out;
}

}  // namespace pw
