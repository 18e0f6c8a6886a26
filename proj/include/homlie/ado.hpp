#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlie/hom_algebra.hpp"
#include "homlie/representation.hpp"

namespace homlie {

/// Twisted Leibniz rule D([x,y]) = [D(x), a(y)] + [a(x), D(y)] on all
/// basis pairs; multiplicative algebras additionally need D a = a D.
CheckResult check_alpha_derivation(const HomAlgebra& a, const Mat& d);

/// Adjoins an outer derivation: the extension L + K D with [D, x] = D(x)
/// and twist fixing D, paired with the action of L on it by
/// x . (y + c D) = [x, y] - c D(x). Throws Err::NotADerivation.
std::pair<HomAlgebra, HomRepresentation> extend_by_derivation(const HomAlgebra& a,
                                                              const Mat& d);

/// Decomposition L = C_1 + ... + C_p into twist-stable components with
/// [C_a, C_b] inside C_{a+b} (zero past the top).
struct Grading {
  std::vector<Subspace> components;  // components[d-1] has degree d
  Index top_degree() const { return static_cast<Index>(components.size()); }
};

/// Twist-stable complements refining the lower central series, when the
/// bracket respects them. Empty when no compatible choice is found; that
/// is an answer, not an error.
std::optional<Grading> find_grading(const HomAlgebra& a);

struct CertificateVerdicts {
  bool faithful = false;
  bool nilpotent = false;
  Index nilindex = 0;  // meaningful only when nilpotent
  bool multiplicative = false;
  bool nondegenerate = false;
  bool all() const {
    return faithful && nilpotent && multiplicative && nondegenerate;
  }
};

/// A representation together with the properties claimed for it and a
/// human-readable construction log. Consumers re-check the claims with
/// verify_certificate; nothing here is trusted.
struct AdoCertificate {
  HomRepresentation representation;
  CertificateVerdicts verdicts;
  std::vector<std::string> trace;
};

/// Faithful representation of a graded algebra: embed by degree into the
/// current algebra truncated just past the top degree, adjoin the Euler
/// derivation, pull the action back along the embedding. Module dimension
/// is dim(L) * top_degree + 1.
AdoCertificate graded_faithful_rep(const HomAlgebra& a, const Grading& grading);

/// Searches base, its tensor powers up to `bound`, and pairwise direct
/// sums of those for a representation whose kernel of rho(z) is not
/// contained in the kernel of rho(x). z must span a central twist
/// eigenline with nonzero eigenvalue and x must be independent of it.
/// Throws Err::SearchExhausted when the family runs out.
HomRepresentation distinguishing_rep(const HomAlgebra& a, const Vec& z,
                                     const Vec& x, const HomRepresentation& base,
                                     Index bound);

/// Restricts rho to W = Ker rho(z) and pushes the action down along the
/// given surjection onto the quotient by the central line spanned by z.
HomRepresentation restrict_to_z_kernel(const HomRepresentation& rho, const Vec& z,
                                       std::shared_ptr<const HomAlgebra> quotient,
                                       const Mat& projection);

struct AdoOptions {
  Index tensor_bound = 4;    // cap for distinguishing_rep searches
  bool force_general = false;  // skip the graded fast path
};

/// Faithful nilpotent multiplicative nondegenerate representation of a
/// nilpotent multiplicative nondegenerate Hom-Lie algebra. Tries a
/// compatible grading first, otherwise presents the algebra as a quotient
/// of a free nilpotent algebra and splits off central lines one at a time.
AdoCertificate ado(const HomAlgebra& a, const AdoOptions& options = {});

/// Every law re-checked from the representation alone; stored verdicts
/// are only compared, never believed.
struct CertificateReport {
  CheckResult representation;
  CheckResult faithful;
  CheckResult nilpotent;
  CheckResult multiplicative;
  CheckResult nondegenerate;
  CertificateVerdicts recomputed;
  bool claims_match = false;
  bool valid() const {
    return representation && faithful && nilpotent && multiplicative &&
           nondegenerate && claims_match;
  }
};

CertificateReport verify_certificate(const HomAlgebra& a, const AdoCertificate& c);

}  // namespace homlie
