#include <algorithm>

#include "check.hpp"
#include "pwitness/convert.hpp"

namespace pw {

namespace {

bool all_positive(const RatVector& u) {
  return std::all_of(u.begin(), u.end(), [](const Rational& v) { return sgn(v) > 0; });
}

bool is_sink(const RatMatrix& m, const IndexSet& a, const RatVector& q) {
  try {
    return all_positive(comp_solve(m, a, q));
  } catch (const SingularCompError&) {
    return false;
  }
}

// Maps a subset of [n] contained in `within` to local coordinates of `within`.
IndexSet localize(const IndexSet& s, const IndexSet& within) {
  const auto members = within.members();
  IndexSet out(members.size());
  for (std::size_t k = 0; k < members.size(); ++k)
    if (s.contains(members[k])) out = out.with(k);
  return out;
}

}  // namespace

IndexSet FaceReduction::lift(const IndexSet& gamma) const {
  IndexSet out = pivoted;
  for (auto k : gamma.members()) out = out.with(index[k]);
  return out;
}

FaceEliminationResult eliminate_face(const RatMatrix& m, const RatVector& q, const IndexSet& alpha,
                                     const IndexSet& beta) {
  if (!verify_pv3(m, PV3TwoSinks{q, alpha, beta})) throw NotAWitnessError("two-sinks condition fails");
  const IndexSet t = alpha | beta;
  const IndexSet s = alpha & beta;

  // Restrict to the face: C_alpha(M|T)^{-1} q_T is the T-part of C_alpha(M)^{-1} q.
  const RatMatrix mt = principal_submatrix(m, t);
  const RatVector qt = restrict_vector(q, t);
  const IndexSet s_local = localize(s, t);
  const IndexSet r_local = s_local.complement();

  FaceReduction fr;
  fr.pivoted = s;
  for (auto k : r_local.members()) fr.index.push_back(t.members()[k]);
  fr.alpha = localize(alpha - s, t - s);
  fr.beta = localize(beta - s, t - s);

  if (s.is_empty()) {
    fr.matrix = mt;
    fr.q = qt;
  } else {
    if (sgn(principal_minor(m, s)) <= 0) return s;
    // L maps the S-columns of M|T to unit vectors and fixes the other unit
    // vectors; LM = [[I, G], [0, Schur]] with Schur = D - C A^{-1} B.
    const RatMatrix a = principal_submatrix(mt, s_local);
    const auto s_idx = s_local.members();
    const auto r_idx = r_local.members();
    const std::size_t nr = r_idx.size();
    std::vector<RatVector> ainv_b(nr);
    for (std::size_t c = 0; c < nr; ++c) {
      RatVector col(s_idx.size());
      for (std::size_t k = 0; k < s_idx.size(); ++k) col[k] = mt(s_idx[k], r_idx[c]);
      ainv_b[c] = solve(a, col);
    }
    RatVector qs(s_idx.size());
    for (std::size_t k = 0; k < s_idx.size(); ++k) qs[k] = qt[s_idx[k]];
    const RatVector ainv_q = solve(a, qs);

    fr.matrix = RatMatrix(nr);
    fr.q = RatVector(nr);
    for (std::size_t r = 0; r < nr; ++r) {
      Rational qv = qt[r_idx[r]];
      for (std::size_t k = 0; k < s_idx.size(); ++k) qv -= mt(r_idx[r], s_idx[k]) * ainv_q[k];
      fr.q[r] = qv;
      for (std::size_t c = 0; c < nr; ++c) {
        Rational v = mt(r_idx[r], r_idx[c]);
        for (std::size_t k = 0; k < s_idx.size(); ++k) v -= mt(r_idx[r], s_idx[k]) * ainv_b[c][k];
        fr.matrix(r, c) = v;
      }
    }
  }

  PW_ENSURE(verify_pv3(fr.matrix, PV3TwoSinks{fr.q, fr.alpha, fr.beta}),
            "face elimination lost the two-sinks property");
  return fr;
}

SinkNormalization normalize_sinks(const RatMatrix& m, const RatVector& q, const IndexSet& alpha,
                                  const IndexSet& beta) {
  const std::size_t n = m.size();
  if (!(alpha & beta).is_empty() || (alpha | beta) != IndexSet::full(n))
    throw NotAWitnessError("normalize_sinks needs complementary vertices");
  if (!verify_pv3(m, PV3TwoSinks{q, alpha, beta})) throw NotAWitnessError("two-sinks condition fails");

  const RatVector ua = comp_solve(m, alpha, q);
  const RatVector ub = comp_solve(m, beta, q);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(ua[i]) == 0 || sgn(ub[i]) == 0)
      throw DegenerateWitnessError("C^{-1}q has a zero in coordinate " + std::to_string(i + 1));

  IndexSet neg(n);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(ua[i]) < 0) neg = neg.with(i);
  SinkNormalization r{Signature{neg}, {}, {}};
  // C_a(DMD) = D C_a(M) D, hence C_a(DMD)^{-1} Dq = D C_a(M)^{-1} q.
  r.matrix = r.d.conjugate(m);
  r.q = r.d.apply(q);
  PW_ENSURE(is_sink(r.matrix, alpha, r.q) && is_sink(r.matrix, beta, r.q),
            "signature change did not produce two sinks");
  return r;
}

SinkStep step_sink(const RatMatrix& m, const RatVector& q, const IndexSet& alpha, const IndexSet& beta) {
  const std::size_t n = m.size();
  const IndexSet diff = alpha ^ beta;
  if ((alpha - beta).is_empty()) throw InternalError("step_sink needs alpha \\ beta non-empty");
  if (!is_sink(m, alpha, q) || !is_sink(m, beta, q)) throw NotAWitnessError("alpha and beta must both be sinks");

  if (sgn(principal_minor(m, alpha)) <= 0) throw PreconditionViolatedError(alpha);
  if (sgn(principal_minor(m, beta)) <= 0) throw PreconditionViolatedError(beta);
  for (auto j : diff.members())
    if (sgn(principal_minor(m, beta.flipped(j))) <= 0) throw PreconditionViolatedError(beta.flipped(j));

  const std::size_t i = (alpha - beta).front();
  const RatMatrix c_alpha = comp_matrix(m, alpha);
  const RatMatrix c_beta = comp_matrix(m, beta);

  // Columns outside alpha (+) beta are shared by C_alpha and C_beta, so
  // their sum maps to the indicator of the shared coordinates under both
  // inverses. Adding enough of it to -M_{.i} lifts every shared coordinate
  // of C_beta^{-1} v above zero without touching coordinate i.
  const IndexSet shared_idx = diff.complement();
  RatVector shared(n);
  for (auto j : shared_idx.members()) shared = shared + c_beta.column(j);
  RatVector minus_col = Rational(-1) * m.column(i);

  SinkStep step;
  step.pivot = i;
  step.c = 1;
  RatVector v, va, vb;
  for (std::size_t doubling = 0;; ++doubling) {
    PW_ENSURE(doubling < 4096, "no admissible multiplier for the shared-column vector");
    v = minus_col + step.c * shared;
    va = solve(c_alpha, v);
    vb = solve(c_beta, v);
    const bool p1 = std::all_of(va.begin(), va.end(), [](const Rational& x) { return sgn(x) >= 0; });
    bool p2 = true;
    for (auto j : shared_idx.members()) p2 = p2 && sgn(vb[j]) > 0;
    const bool p3 = sgn(vb[i]) < 0;
    if (p1 && p2 && p3) break;
    step.c *= 2;
  }

  // Move q along v until the first coordinate of C_beta^{-1} q reaches 0.
  const RatVector ub = solve(c_beta, q);
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(vb[j]) >= 0) continue;
    Rational r = ub[j] / -vb[j];
    if (!hit || r < step.t) {
      step.t = std::move(r);
      hit = j;
    }
  }
  PW_ENSURE(hit.has_value() && diff.contains(*hit), "sink walk hit a shared coordinate");
  step.flipped = *hit;
  step.beta = beta.flipped(*hit);

  const RatVector q1 = q + step.t * v;
  // The zero at `flipped` makes C_gamma^{-1} q1 = C_beta^{-1} q1 >= 0; a
  // small push along C_gamma 1 makes it strictly positive.
  const RatMatrix c_gamma = comp_matrix(m, step.beta);
  const RatVector push = c_gamma * RatVector(n, Rational(1));
  const RatVector ua1 = solve(c_alpha, q1);
  const RatVector ug1 = solve(c_beta, q1);
  Rational delta;
  bool have_delta = false;
  for (const auto* u : {&ua1, &ug1})
    for (const auto& x : *u)
      if (sgn(x) > 0 && (!have_delta || x < delta)) {
        delta = x;
        have_delta = true;
      }
  PW_ENSURE(have_delta, "no positive coordinate after the step");
  Rational drift = 1;
  for (const auto& x : solve(c_alpha, push)) drift = std::max(drift, Rational(abs(x)));
  step.eps = delta / (2 * drift);
  step.q = q1 + step.eps * push;

  PW_ENSURE(is_sink(m, alpha, step.q), "step_sink lost the fixed sink");
  PW_ENSURE(is_sink(m, step.beta, step.q), "step_sink did not produce the new sink");
  return step;
}

IndexSet two_sinks_to_minor(const RatMatrix& m, const RatVector& q, const IndexSet& alpha,
                            const IndexSet& beta, SinkWalkStats* stats) {
  const std::size_t n = m.size();
  if (alpha == beta) throw NotAWitnessError("sinks must be distinct");
  if (!is_sink(m, alpha, q) || !is_sink(m, beta, q)) throw NotAWitnessError("alpha and beta must both be sinks");

  SinkWalkStats local;
  IndexSet a = alpha, b = beta;
  RatVector cur = q;
  std::optional<IndexSet> result;
  for (std::size_t iter = 0; iter <= n * n && !result; ++iter) {
    if (sgn(principal_minor(m, a)) <= 0) {
      result = a;
      break;
    }
    if (sgn(principal_minor(m, b)) <= 0) {
      result = b;
      break;
    }
    // Base case: with a = b + i both sinks, Cramer's rule makes det(M|a)
    // and det(M|b) opposite in sign, so one of the checks above fired.
    PW_ENSURE((a ^ b).size() > 1, "sink walk stuck: adjacent sinks with positive minors");
    if ((a - b).is_empty()) {
      std::swap(a, b);
      ++local.swaps;
    }
    try {
      SinkStep step = step_sink(m, cur, a, b);
      b = step.beta;
      cur = std::move(step.q);
      ++local.steps;
    } catch (const PreconditionViolatedError& e) {
      result = e.subset();
    }
  }
  PW_ENSURE(result.has_value(), "sink walk exceeded n^2 iterations");
  PW_ENSURE(verify_pv1(m, PV1{*result}), "sink walk returned a positive minor");
  if (stats) *stats = local;
  return *result;
}

IndexSet pv3_to_pv1(const RatMatrix& m, const Witness& w, SinkWalkStats* stats) {
  if (kind_of(w) != WitnessKind::PV3) throw NotAWitnessError("expected a PV3 witness");
  if (!verify_witness(m, w)) throw NotAWitnessError("PV3 condition fails");

  if (const auto* s = std::get_if<PV3Singular>(&w)) {
    PW_ENSURE(sgn(principal_minor(m, s->alpha)) == 0, "singular C_alpha with non-zero minor");
    return s->alpha;
  }

  const auto& two = std::get<PV3TwoSinks>(w);
  const FaceEliminationResult elim = eliminate_face(m, two.q, two.alpha, two.beta);
  if (const auto* early = std::get_if<IndexSet>(&elim)) return *early;

  const auto& fr = std::get<FaceReduction>(elim);
  const SinkNormalization norm = normalize_sinks(fr.matrix, fr.q, fr.alpha, fr.beta);
  // Principal minors of the Schur complement are det(M|S+gamma)/det(M|S)
  // and det(M|S) > 0 here, so the lifted subset carries the sign.
  const IndexSet gamma = two_sinks_to_minor(norm.matrix, norm.q, fr.alpha, fr.beta, stats);
  const IndexSet lifted = fr.lift(gamma);
  PW_ENSURE(verify_pv1(m, PV1{lifted}), "lifted subset has a positive minor");
  return lifted;
}

}  // namespace pw
