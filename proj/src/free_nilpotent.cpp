#include "homlie/free_nilpotent.hpp"

#include <array>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

Index BracketWord::degree() const {
  return is_leaf() ? 1 : left->degree() + right->degree();
}

BracketWord BracketWord::leaf(Index generator, Index alpha_power) {
  BracketWord w;
  w.generator = generator;
  w.alpha_power = alpha_power;
  return w;
}

BracketWord BracketWord::bracket(const BracketWord& l, const BracketWord& r) {
  BracketWord w;
  w.left = std::make_shared<BracketWord>(l);
  w.right = std::make_shared<BracketWord>(r);
  return w;
}

std::string BracketWord::str() const {
  if (is_leaf()) {
    std::string base = "x" + std::to_string(generator + 1);
    if (alpha_power == 0) return base;
    if (alpha_power == 1) return "a(" + base + ")";
    return "a^" + std::to_string(alpha_power) + "(" + base + ")";
  }
  return "[" + left->str() + "," + right->str() + "]";
}

bool word_less(const BracketWord& a, const BracketWord& b) {
  const Index da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.is_leaf()) {
    if (a.generator != b.generator) return a.generator < b.generator;
    return a.alpha_power < b.alpha_power;
  }
  if (word_less(*a.left, *b.left)) return true;
  if (word_less(*b.left, *a.left)) return false;
  return word_less(*a.right, *b.right);
}

namespace {

struct Component {
  std::vector<BracketWord> words;
  Mat alpha;   // twist restricted to this degree
  Mat reduce;  // candidate coordinates -> basis coordinates (degree >= 2)
};

Index comp_dim(const Component& c) { return static_cast<Index>(c.words.size()); }

// Candidates of degree d: blocks by degree a of the left factor, row-major
// over (basis of degree a) x (basis of degree d-a). This is ascending in
// word_less, so pivoting on reversed columns eliminates the large words.
Index candidate_count(const std::vector<Component>& comps, Index d) {
  Index m = 0;
  for (Index a = 1; a < d; ++a) m += comp_dim(comps[a]) * comp_dim(comps[d - a]);
  return m;
}

Index candidate_index(const std::vector<Component>& comps, Index d, Index a,
                      Index u, Index v) {
  Index off = 0;
  for (Index a2 = 1; a2 < a; ++a2)
    off += comp_dim(comps[a2]) * comp_dim(comps[d - a2]);
  return off + u * comp_dim(comps[d - a]) + v;
}

// (block degree, left index, right index) of every candidate, ascending.
std::vector<std::array<Index, 3>> candidate_sources(
    const std::vector<Component>& comps, Index d) {
  std::vector<std::array<Index, 3>> out;
  for (Index a = 1; a < d; ++a)
    for (Index u = 0; u < comp_dim(comps[a]); ++u)
      for (Index v = 0; v < comp_dim(comps[d - a]); ++v)
        out.push_back({a, u, v});
  return out;
}

Component build_degree(const std::vector<Component>& comps, Index d,
                       Mat& relations) {
  const Index m = candidate_count(comps, d);
  Component out;
  out.alpha = Mat::Zero(0, 0);
  out.reduce = Mat::Zero(0, m);
  relations = Mat::Zero(0, m);
  if (m == 0) return out;

  // [u,v] at degree a+b < d in basis coordinates of that degree
  auto inner_bracket = [&](Index a, Index u, Index b, Index v) {
    return comps[a + b].reduce.col(candidate_index(comps, a + b, a, u, v));
  };
  auto add_outer = [&](Vec& r, const Vec& inner, const Vec& twisted,
                       Index deg_left, Index /*deg_right*/) {
    for (Index p = 0; p < inner.size(); ++p) {
      if (inner(p).is_zero()) continue;
      for (Index q = 0; q < twisted.size(); ++q) {
        if (twisted(q).is_zero()) continue;
        r(candidate_index(comps, d, deg_left, p, q)) += inner(p) * twisted(q);
      }
    }
  };

  std::vector<Vec> rows;
  // anticommutativity on candidate pairs
  for (Index a = 1; a < d; ++a) {
    const Index b = d - a;
    for (Index u = 0; u < comp_dim(comps[a]); ++u)
      for (Index v = 0; v < comp_dim(comps[b]); ++v) {
        const Index c1 = candidate_index(comps, d, a, u, v);
        const Index c2 = candidate_index(comps, d, b, v, u);
        if (c1 > c2) continue;
        Vec r = Vec::Zero(m);
        r(c1) += 1;
        r(c2) += 1;
        rows.push_back(std::move(r));
      }
  }
  // Hom-Jacobi on basis triples of total degree d, twists expanded through
  // the already-built lower-degree matrices
  for (Index a = 1; a < d; ++a)
    for (Index b = 1; a + b < d; ++b) {
      const Index c = d - a - b;
      for (Index u = 0; u < comp_dim(comps[a]); ++u)
        for (Index v = 0; v < comp_dim(comps[b]); ++v)
          for (Index w = 0; w < comp_dim(comps[c]); ++w) {
            Vec r = Vec::Zero(m);
            add_outer(r, inner_bracket(a, u, b, v), comps[c].alpha.col(w),
                      a + b, c);
            add_outer(r, inner_bracket(c, w, a, u), comps[b].alpha.col(v),
                      c + a, b);
            add_outer(r, inner_bracket(b, v, c, w), comps[a].alpha.col(u),
                      b + c, a);
            bool nonzero = false;
            for (Index i = 0; i < m && !nonzero; ++i) nonzero = !r(i).is_zero();
            if (nonzero) rows.push_back(std::move(r));
          }
    }

  relations = Mat::Zero(static_cast<Index>(rows.size()), m);
  for (Index i = 0; i < relations.rows(); ++i)
    relations.row(i) = rows[i].transpose();

  Mat desc(relations.rows(), m);
  for (Index c = 0; c < m; ++c) desc.col(c) = relations.col(m - 1 - c);
  const Rref rr = rref(std::move(desc));

  std::vector<bool> eliminated(m, false);
  for (Index p : rr.pivots) eliminated[m - 1 - p] = true;
  std::vector<Index> basis_pos(m, -1);
  const auto sources = candidate_sources(comps, d);
  Index nb = 0;
  for (Index c = 0; c < m; ++c)
    if (!eliminated[c]) {
      basis_pos[c] = nb++;
      const auto& s = sources[c];
      out.words.push_back(BracketWord::bracket(comps[s[0]].words[s[1]],
                                               comps[d - s[0]].words[s[2]]));
    }

  out.reduce = Mat::Zero(nb, m);
  for (Index c = 0; c < m; ++c)
    if (!eliminated[c]) out.reduce(basis_pos[c], c) = 1;
  for (Index r = 0; r < rr.rank; ++r) {
    const Index p = rr.pivots[r];
    const Index c = m - 1 - p;  // eliminated candidate, rewritten below
    for (Index j = p + 1; j < static_cast<Index>(m); ++j) {
      if (rr.mat(r, j).is_zero()) continue;
      out.reduce(basis_pos[m - 1 - j], c) -= rr.mat(r, j);
    }
  }

  out.alpha = Mat::Zero(nb, nb);
  for (Index c = 0; c < m; ++c) {
    if (eliminated[c]) continue;
    const auto& s = sources[c];
    const Mat& al = comps[s[0]].alpha;
    const Mat& ar = comps[d - s[0]].alpha;
    Vec img = Vec::Zero(m);
    for (Index p = 0; p < al.rows(); ++p) {
      if (al(p, s[1]).is_zero()) continue;
      for (Index q = 0; q < ar.rows(); ++q) {
        if (ar(q, s[2]).is_zero()) continue;
        img(candidate_index(comps, d, s[0], p, q)) += al(p, s[1]) * ar(q, s[2]);
      }
    }
    out.alpha.col(basis_pos[c]) = out.reduce * img;
  }
  return out;
}

}  // namespace

std::pair<HomAlgebra, GradedPresentation> free_multiplicative_nilpotent(
    Index generators, Index nilindex_bound, const Polynomial& f) {
  if (generators < 1 || nilindex_bound < 2 || !f.is_monic() || f.degree() < 1)
    fail(Err::PreconditionFailed,
         "free algebra needs k >= 1, n >= 2 and a monic twist polynomial");
  const Index k = generators, n = nilindex_bound, df = f.degree();

  std::vector<Component> comps(n);
  for (Index i = 0; i < k; ++i)
    for (Index l = 0; l < df; ++l)
      comps[1].words.push_back(BracketWord::leaf(i, l));
  comps[1].alpha = kron(Mat::Identity(k, k), f.companion());
  comps[1].reduce = Mat::Zero(0, 0);

  std::vector<Subspace> degree_relations;
  degree_relations.push_back(Subspace::zero(k * df));
  for (Index d = 2; d < n; ++d) {
    Mat rel;
    comps[d] = build_degree(comps, d, rel);
    degree_relations.push_back(Subspace::span_rows(rel));
  }

  std::vector<Index> offset(n + 1, 0);
  for (Index d = 1; d < n; ++d) offset[d + 1] = offset[d] + comp_dim(comps[d]);
  const Index total = offset[n];

  std::vector<std::vector<BracketWord>> degree_basis;
  std::vector<Index> degree_of;
  std::vector<std::string> names;
  for (Index d = 1; d < n; ++d) {
    degree_basis.push_back(comps[d].words);
    for (const auto& w : comps[d].words) {
      degree_of.push_back(d);
      names.push_back(w.str());
    }
  }

  Mat twist = Mat::Zero(total, total);
  for (Index d = 1; d < n; ++d)
    twist.block(offset[d], offset[d], comp_dim(comps[d]), comp_dim(comps[d])) =
        comps[d].alpha;

  std::vector<Mat> left(total, Mat::Zero(total, total));
  for (Index a = 1; a < n; ++a)
    for (Index u = 0; u < comp_dim(comps[a]); ++u)
      for (Index b = 1; a + b < n; ++b)
        for (Index v = 0; v < comp_dim(comps[b]); ++v)
          left[offset[a] + u].block(offset[a + b], offset[b] + v,
                                    comp_dim(comps[a + b]), 1) =
              comps[a + b].reduce.col(candidate_index(comps, a + b, a, u, v));

  HomAlgebra alg(Flavor::lie, std::move(left), std::move(twist),
                 std::move(names));
  if (CheckResult r = check_hom_lie(alg); !r)
    fail(Err::InternalCheckFailed, "free algebra: " + describe(r));
  if (CheckResult r = check_multiplicative(alg); !r)
    fail(Err::InternalCheckFailed, "free algebra: " + describe(r));

  GradedPresentation pres{k,
                          n,
                          f,
                          std::move(degree_basis),
                          std::move(degree_relations),
                          std::move(degree_of),
                          alg};
  return {std::move(alg), std::move(pres)};
}

std::vector<BracketWord> candidate_words(const GradedPresentation& p,
                                         Index degree) {
  if (degree < 1 || degree >= p.nilindex_bound)
    fail(Err::PreconditionFailed, "degree outside 1.." +
                                      std::to_string(p.nilindex_bound - 1));
  if (degree == 1) return p.degree_basis[0];
  std::vector<BracketWord> out;
  for (Index a = 1; a < degree; ++a)
    for (const auto& u : p.degree_basis[a - 1])
      for (const auto& v : p.degree_basis[degree - a - 1])
        out.push_back(BracketWord::bracket(u, v));
  return out;
}

Vec evaluate_word(const BracketWord& w, const HomAlgebra& target,
                  const std::vector<Vec>& targets) {
  if (w.is_leaf()) {
    if (w.generator < 0 || w.generator >= static_cast<Index>(targets.size()))
      fail(Err::DimensionMismatch, "no target for generator " +
                                       std::to_string(w.generator + 1));
    Vec v = targets[w.generator];
    for (Index l = 0; l < w.alpha_power; ++l) v = target.apply_twist(v);
    return v;
  }
  return target.product(evaluate_word(*w.left, target, targets),
                        evaluate_word(*w.right, target, targets));
}

Mat universal_map(const GradedPresentation& m, const HomAlgebra& target,
                  const std::vector<Vec>& targets) {
  if (target.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "universal map needs a Hom-Lie target");
  if (static_cast<Index>(targets.size()) != m.generators)
    fail(Err::DimensionMismatch,
         "expected " + std::to_string(m.generators) + " targets, got " +
             std::to_string(targets.size()));
  for (const Vec& t : targets)
    if (t.size() != target.dim())
      fail(Err::DimensionMismatch, "target vector of wrong dimension");
  if (!check_multiplicative(target))
    fail(Err::PreconditionFailed, "target algebra is not multiplicative");
  if (!(m.twist_poly(target.twist()) ==
        Mat::Zero(target.dim(), target.dim())))
    fail(Err::PolynomialNotSatisfied,
         "target twist does not satisfy " + m.twist_poly.str());
  const LowerCentralSeries lcs = lower_central_series(target);
  if (!lcs.nilindex)
    fail(Err::NilindexExceeded, "target algebra is not nilpotent");
  if (*lcs.nilindex > m.nilindex_bound)
    fail(Err::NilindexExceeded,
         "target has nilindex " + std::to_string(*lcs.nilindex) +
             ", free algebra is truncated at " +
             std::to_string(m.nilindex_bound));

  Mat phi(target.dim(), m.algebra.dim());
  Index col = 0;
  for (const auto& level : m.degree_basis)
    for (const auto& w : level) phi.col(col++) = evaluate_word(w, target, targets);

  for (Index i = 0; i < m.algebra.dim(); ++i)
    for (Index j = 0; j < m.algebra.dim(); ++j)
      if (!(Vec(phi * m.algebra.product(i, j)) ==
            target.product(phi.col(i), phi.col(j))))
        fail(Err::InternalCheckFailed, "universal map does not respect brackets");
  if (!(phi * m.algebra.twist() == target.twist() * phi))
    fail(Err::InternalCheckFailed, "universal map does not respect twists");
  return phi;
}

QuotientPresentation present_as_quotient(const HomAlgebra& a) {
  if (a.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "presentation needs a Hom-Lie algebra");
  if (a.dim() == 0)
    fail(Err::PreconditionFailed, "zero algebra has no generators");
  if (!check_multiplicative(a))
    fail(Err::PreconditionFailed, "algebra is not multiplicative");
  if (!is_invertible(a.twist()))
    fail(Err::DegenerateTwist, "twist is not injective");
  const Index n = nilindex(a);
  Polynomial f = min_poly(a.twist());

  auto built = free_multiplicative_nilpotent(a.dim(), n, f);
  GradedPresentation pres = std::move(built.second);

  std::vector<Vec> targets;
  for (Index i = 0; i < a.dim(); ++i) targets.push_back(Vec::Unit(a.dim(), i));
  Mat phi = universal_map(pres, a, targets);
  if (rank(phi) != a.dim())
    fail(Err::InternalCheckFailed, "basis targets gave a non-surjective map");
  Subspace ker = kernel(phi);
  if (!(hom_closure(pres.algebra, ker, ClosureMode::ideal) == ker))
    fail(Err::InternalCheckFailed, "kernel of the presentation is not an ideal");
  return {a.dim(), n, std::move(f), std::move(pres), std::move(phi),
          std::move(ker)};
}

}  // namespace homlie
