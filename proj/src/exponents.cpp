#include "mint/exponents.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mint/linprog.hpp"
#include "mint/parallel.hpp"
#include "mint/summation.hpp"

namespace mint {

namespace {

constexpr double kSumTolerance = 1e-12;

void check_common_length(const std::vector<ExponentTuple>& tuples) {
  if (tuples.empty()) raise(ErrorCode::LengthMismatch, "need at least one tuple");
  for (const auto& t : tuples)
    if (t.size() != tuples.front().size())
      raise(ErrorCode::LengthMismatch, "tuples have differing lengths");
}

// Equality constraints of the barycentric system: sum_s theta_s alpha^(s) = x
// together with sum_s theta_s = 1, over theta >= 0.
void barycentric_system(const Eigen::VectorXd& target, const std::vector<ExponentTuple>& tuples,
                        Eigen::MatrixXd& A, Eigen::VectorXd& b) {
  const Eigen::Index d = target.size();
  const Eigen::Index n = Eigen::Index(tuples.size());
  A.setZero(d + 1, n);
  for (Eigen::Index s = 0; s < n; ++s) A.col(s).head(d) = tuples[std::size_t(s)].entries();
  A.row(d).setOnes();
  b.resize(d + 1);
  b.head(d) = target;
  b[d] = 1.0;
}

bool hull_member(const Eigen::VectorXd& point, const std::vector<ExponentTuple>& tuples) {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  barycentric_system(point, tuples, A, b);
  return lp::feasible(A, b);
}

// Brute-force H-representation of the hull of a handful of points, carried
// out inside the affine hull so segments and polygons work as well as solids.
std::vector<Facet> enumerate_facets(const std::vector<ExponentTuple>& claims) {
  const Eigen::Index dim = claims.front().size();
  const Eigen::Index n = Eigen::Index(claims.size());

  // Project the hyperplane sum(x)=1 to the first dim-1 coordinates.
  Eigen::MatrixXd pts(n, dim - 1);
  for (Eigen::Index i = 0; i < n; ++i)
    pts.row(i) = claims[std::size_t(i)].entries().head(dim - 1).transpose();

  Eigen::MatrixXd diffs(n - 1, dim - 1);
  for (Eigen::Index i = 1; i < n; ++i) diffs.row(i - 1) = pts.row(i) - pts.row(0);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(diffs.transpose());
  qr.setThreshold(1e-10);
  const Eigen::Index rank = qr.rank();
  if (rank == 0) raise(ErrorCode::DegenerateHull, "claims coincide");

  // Orthonormal basis of the affine hull; work in those coordinates.
  const Eigen::MatrixXd Q =
      Eigen::MatrixXd(qr.householderQ()).leftCols(rank);  // (dim-1) x rank
  Eigen::MatrixXd y(n, rank);
  for (Eigen::Index i = 0; i < n; ++i)
    y.row(i) = (Q.transpose() * (pts.row(i) - pts.row(0)).transpose()).transpose();

  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  const double tol = 1e-9 * scale;

  std::vector<Facet> facets;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(rank), 0);
  std::function<void(Eigen::Index, Eigen::Index)> walk = [&](Eigen::Index start,
                                                             Eigen::Index depth) {
    if (depth == rank) {
      Eigen::VectorXd u;
      if (rank == 1) {
        u = Eigen::VectorXd::Ones(1);
      } else {
        Eigen::MatrixXd span(rank - 1, rank);
        for (Eigen::Index k = 1; k < rank; ++k)
          span.row(k - 1) = y.row(pick[std::size_t(k)]) - y.row(pick[0]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(span);
        lu.setThreshold(1e-10);
        if (lu.dimensionOfKernel() != 1) return;
        u = lu.kernel().col(0);
      }
      const double b0 = u.dot(y.row(pick[0]).transpose());
      bool all_below = true, all_above = true;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double v = u.dot(y.row(i).transpose());
        if (v > b0 + tol) all_below = false;
        if (v < b0 - tol) all_above = false;
      }
      if (!all_below && !all_above) return;
      if (all_above) u = -u;
      const double b = u.dot(y.row(pick[0]).transpose());

      // Lift back to full coordinates: u acts on Q^T(head(x) - p0), and the
      // gauge freedom along (1,...,1) is removed before normalising.
      Eigen::VectorXd normal = Eigen::VectorXd::Zero(dim);
      normal.head(dim - 1) = Q * u;
      double offset = b + normal.head(dim - 1).dot(pts.row(0).transpose());
      const double mean = normal.sum() / double(dim);
      normal.array() -= mean;
      offset -= mean;
      const double len = normal.norm();
      if (len < 1e-12) return;
      normal /= len;
      offset /= len;
      for (const auto& f : facets)
        if ((f.normal - normal).cwiseAbs().maxCoeff() < 1e-9 && std::abs(f.offset - offset) < 1e-9)
          return;
      facets.push_back(Facet{normal, offset});
      return;
    }
    for (Eigen::Index i = start; i < n; ++i) {
      pick[std::size_t(depth)] = i;
      walk(i + 1, depth + 1);
    }
  };
  walk(0, 0);

  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    for (Eigen::Index i = 0; i < a.normal.size(); ++i)
      if (a.normal[i] != b.normal[i]) return a.normal[i] < b.normal[i];
    return a.offset < b.offset;
  });
  return facets;
}

}  // namespace

ExponentTuple::ExponentTuple(Eigen::VectorXd entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) raise(ErrorCode::LengthMismatch, "tuple needs at least two entries");
  int nonpositive = 0;
  CompensatedSum sum;
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    const double v = entries_[i];
    if (!std::isfinite(v)) raise(ErrorCode::InvalidInput, "tuple entries must be finite");
    if (v > 1.0 + kSumTolerance)
      raise(ErrorCode::EntryAboveOne, "entry " + std::to_string(i) + " exceeds one");
    if (v <= 0.0) ++nonpositive;
    sum.add(v);
  }
  if (nonpositive > 1)
    raise(ErrorCode::TwoNonpositive, "at most one entry may be non-positive");
  if (std::abs(sum.value() - 1.0) > kSumTolerance)
    raise(ErrorCode::SumNotOne, "entries must sum to one");
}

ExponentTuple validate_tuple(const std::vector<double>& entries) {
  Eigen::VectorXd v(Eigen::Index(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v[Eigen::Index(i)] = entries[i];
  return ExponentTuple(std::move(v));
}

bool operator==(const ExponentTuple& a, const ExponentTuple& b) {
  return a.size() == b.size() && a.entries() == b.entries();
}

int argmin_index(const ExponentTuple& t) {
  int best = 0;
  for (Eigen::Index i = 1; i < t.size(); ++i)
    if (t[i] < t[best]) best = int(i);
  return best;
}

Classification classify(const ExponentTuple& t) {
  bool good = true;
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (!(t[i] > 0.0 && t[i] < 1.0)) good = false;
  return Classification{good, argmin_index(t)};
}

CombinationWeights::CombinationWeights(Eigen::VectorXd thetas) : thetas_(std::move(thetas)) {
  if (thetas_.size() == 0) raise(ErrorCode::LengthMismatch, "weights must be non-empty");
  CompensatedSum sum;
  for (Eigen::Index s = 0; s < thetas_.size(); ++s) {
    const double v = thetas_[s];
    if (!std::isfinite(v) || v < -kSumTolerance || v > 1.0 + kSumTolerance)
      raise(ErrorCode::InvalidInput, "weights must lie in [0, 1]");
    sum.add(v);
  }
  if (std::abs(sum.value() - 1.0) > kSumTolerance)
    raise(ErrorCode::SumNotOne, "weights must sum to one");
}

ExponentTuple convex_combination(const std::vector<ExponentTuple>& tuples,
                                 const CombinationWeights& weights) {
  check_common_length(tuples);
  if (Eigen::Index(tuples.size()) != weights.size())
    raise(ErrorCode::LengthMismatch, "one weight per tuple required");
  Eigen::VectorXd result = Eigen::VectorXd::Zero(tuples.front().size());
  for (std::size_t s = 0; s < tuples.size(); ++s)
    result += weights[Eigen::Index(s)] * tuples[s].entries();
  return ExponentTuple(std::move(result));
}

std::optional<CombinationWeights> solve_combination(const ExponentTuple& target,
                                                    const std::vector<ExponentTuple>& tuples) {
  check_common_length(tuples);
  if (tuples.front().size() != target.size())
    raise(ErrorCode::LengthMismatch, "target length differs from the tuples");

  // Variables (theta_1..theta_n, t, u_1..u_n): maximise t subject to the
  // barycentric equalities and theta_s - t - u_s = 0, everything >= 0. The
  // slack variables turn min theta >= t into equalities.
  const Eigen::Index d = target.size();
  const Eigen::Index n = Eigen::Index(tuples.size());
  const Eigen::Index vars = 2 * n + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(d + 1 + n, vars);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(d + 1 + n);
  for (Eigen::Index s = 0; s < n; ++s) A.col(s).head(d) = tuples[std::size_t(s)].entries();
  A.row(d).head(n).setOnes();
  b.head(d) = target.entries();
  b[d] = 1.0;
  for (Eigen::Index s = 0; s < n; ++s) {
    A(d + 1 + s, s) = 1.0;
    A(d + 1 + s, n) = -1.0;
    A(d + 1 + s, n + 1 + s) = -1.0;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(vars);
  c[n] = -1.0;

  const lp::Solution sol = lp::solve(std::move(A), std::move(b), std::move(c));
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  Eigen::VectorXd thetas = sol.x.head(n).cwiseMax(0.0);
  return CombinationWeights(std::move(thetas));
}

bool interior_membership(const Eigen::VectorXd& target, const std::vector<ExponentTuple>& tuples,
                         double delta) {
  check_common_length(tuples);
  if (tuples.front().size() != target.size())
    raise(ErrorCode::LengthMismatch, "target length differs from the tuples");
  if (!(delta > 0.0)) raise(ErrorCode::InvalidInput, "delta must be positive");

  const Eigen::Index d = target.size();
  for (Eigen::Index i = 0; i + 1 < d; ++i) {
    for (const double sign : {1.0, -1.0}) {
      Eigen::VectorXd probe = target;
      probe[i] += sign * delta;
      probe[i + 1] -= sign * delta;
      if (!hull_member(probe, tuples)) return false;
    }
  }
  return true;
}

bool interior_membership(const ExponentTuple& target, const std::vector<ExponentTuple>& tuples,
                         double delta) {
  return interior_membership(target.entries(), tuples, delta);
}

bool RegionDescription::contains(const ExponentTuple& t) const {
  return classify(t).good && interior_membership(t, claims, delta);
}

RegionDescription deduce_strong_region(const std::vector<ExponentTuple>& claims, int resolution,
                                       double delta, int threads) {
  if (claims.size() < 2) raise(ErrorCode::LengthMismatch, "need at least two claims");
  check_common_length(claims);
  if (resolution < 1) raise(ErrorCode::InvalidInput, "resolution must be at least 1");

  bool all_equal = true;
  for (const auto& c : claims)
    if ((c.entries() - claims.front().entries()).cwiseAbs().maxCoeff() > 1e-14) all_equal = false;
  if (all_equal) raise(ErrorCode::DegenerateHull, "claims coincide");

  RegionDescription region;
  region.claims = claims;
  region.delta = delta;
  region.resolution = resolution;
  if (claims.front().arity() <= 3) region.facets = enumerate_facets(claims);

  // Barycentric grid: every composition of `resolution` into |claims| parts,
  // in lexicographic order.
  const std::size_t n = claims.size();
  std::vector<Eigen::VectorXd> candidates;
  std::vector<int> counts(n, 0);
  std::function<void(std::size_t, int)> emit = [&](std::size_t slot, int remaining) {
    if (slot + 1 == n) {
      counts[slot] = remaining;
      Eigen::VectorXd x = Eigen::VectorXd::Zero(claims.front().size());
      for (std::size_t s = 0; s < n; ++s)
        x += (double(counts[s]) / double(resolution)) * claims[s].entries();
      candidates.push_back(std::move(x));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      counts[slot] = k;
      emit(slot + 1, remaining - k);
    }
  };
  emit(0, resolution);

  std::vector<char> inside(candidates.size(), 0);
  parallel_for(std::int64_t(candidates.size()), threads, [&](std::int64_t i) {
    const Eigen::VectorXd& x = candidates[std::size_t(i)];
    bool ok = false;
    try {
      const ExponentTuple t{Eigen::VectorXd(x)};
      ok = classify(t).good && interior_membership(t, claims, delta);
    } catch (const Error&) {
      ok = false;  // grid point is not a valid tuple
    }
    inside[std::size_t(i)] = ok ? 1 : 0;
  });

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    region.grid.push_back(RegionGridPoint{candidates[i], inside[i] != 0});
    if (inside[i]) region.samples.emplace_back(Eigen::VectorXd(candidates[i]));
  }
  return region;
}

}  // namespace mint
