// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit when
// any fails. Time bounds are asserted here, not just reported.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "homlie/ado.hpp"
#include "homlie/errors.hpp"
#include "homlie/free_nilpotent.hpp"
#include "homlie/hom_associative.hpp"
#include "homlie/io.hpp"
#include "homlie/polynomial.hpp"
#include "homlie/representation.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace homlie;
using namespace homlie::fixtures;

namespace {

struct Gate {
  int failed = 0;

  template <typename Fn>
  void criterion(int id, const char* what, double bound, Fn fn) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && bound > 0 && secs >= bound) {
      ok = false;
      detail = "exceeded the " + std::to_string(bound) + " s bound";
    }
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                id, what, secs, ok || detail.empty() ? "" : " -- ",
                ok ? "" : detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
};

Rational rnd_nonzero(std::mt19937& rng) {
  for (;;) {
    const Rational r = testutil::rnd_rational(rng);
    if (!r.is_zero()) return r;
  }
}

Mat rnd_upper_invertible(std::mt19937& rng, Index n) {
  Mat t = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) t(i, j) = testutil::rnd_rational(rng);
    t(i, i) = rnd_nonzero(rng);
  }
  return t;
}

// 1. checker vs. brute-force cyclic sum on random anticommutative tables
bool axiom_soundness(std::string& detail) {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Mat> left(3, Mat::Zero(3, 3));
    for (Index i = 0; i < 3; ++i)
      for (Index j = i + 1; j < 3; ++j)
        set_bracket(left, i, j, testutil::rnd_vector(rng, 3));
    const HomAlgebra a(Flavor::lie, std::move(left),
                       testutil::rnd_matrix(rng, 3, 3));
    if (check_hom_lie(a).ok != oracles::hom_jacobi_brute(a)) {
      detail = "disagreement on trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

HomRepresentation random_mult_rep(std::mt19937& rng,
                                  std::shared_ptr<const HomAlgebra> a) {
  const int kind = static_cast<int>(rng() % 3);
  if (kind == 0) {
    const Index n = a->dim();
    const Mat g = testutil::rnd_invertible(rng, n);
    const Mat gi = inverse(g);
    const HomRepresentation ad = adjoint_rep(a);
    std::vector<Mat> actions;
    for (Index i = 0; i < n; ++i)
      actions.push_back(Mat(g * ad.action(i) * gi));
    return HomRepresentation(std::move(a), std::move(actions),
                             Mat(g * ad.module_twist() * gi));
  }
  const Index m = 1 + static_cast<Index>(rng() % 4);
  return zero_rep(std::move(a), m, testutil::rnd_invertible(rng, m));
}

// 2. tensor products of multiplicative representations stay representations
bool tensor_law(std::string& detail) {
  std::mt19937 rng(20260816);
  std::vector<std::shared_ptr<const HomAlgebra>> pool;
  pool.push_back(std::make_shared<const HomAlgebra>(heisenberg()));
  pool.push_back(std::make_shared<const HomAlgebra>(h3_lambda()));
  pool.push_back(std::make_shared<const HomAlgebra>(filiform_n4()));
  pool.push_back(
      std::make_shared<const HomAlgebra>(abelian(3, diag({1, 2, 3}))));
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = pool[rng() % pool.size()];
    const HomRepresentation t =
        tensor_rep(random_mult_rep(rng, a), random_mult_rep(rng, a));
    if (!check_rep(t).ok || !check_rep_multiplicative(t).ok) {
      detail = "law failure on trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 3. rep_nilindex(tensor) <= n + m - 1, with the adjoint values pinned
bool tensor_nilindex_bound(std::string& detail) {
  const auto need = [&](const HomRepresentation& rho, std::string& why) {
    const auto n = rep_nilindex(rho);
    if (!n) why = "a fixture representation is not nilpotent";
    return n;
  };
  if (rep_nilindex(adjoint_rep(std::make_shared<const HomAlgebra>(
          heisenberg()))) != std::optional<Index>(2)) {
    detail = "adjoint nilindex of the Heisenberg algebra is not 2";
    return false;
  }
  if (rep_nilindex(adjoint_rep(std::make_shared<const HomAlgebra>(
          filiform_n4()))) != std::optional<Index>(3)) {
    detail = "adjoint nilindex of the filiform algebra is not 3";
    return false;
  }
  for (const HomAlgebra& base : {heisenberg(), h3_lambda(), filiform_n4()}) {
    auto a = std::make_shared<const HomAlgebra>(base);
    std::vector<HomRepresentation> reps;
    reps.push_back(adjoint_rep(a));
    reps.push_back(zero_rep(a, 2, identity(2)));
    reps.push_back(ado(base).representation);
    for (const HomRepresentation& r1 : reps)
      for (const HomRepresentation& r2 : reps) {
        const auto n = need(r1, detail);
        const auto m = need(r2, detail);
        if (!n || !m) return false;
        const auto t = need(tensor_rep(r1, r2), detail);
        if (!t) return false;
        if (*t > *n + *m - 1) {
          detail = "bound violated over a dim-" + std::to_string(base.dim()) +
                   " algebra";
          return false;
        }
      }
  }
  return true;
}

HomAlgebra random_triangular_nilpotent(std::mt19937& rng) {
  switch (rng() % 3) {
    case 0: {
      const Index d = 1 + static_cast<Index>(rng() % 4);
      return abelian(d, rnd_upper_invertible(rng, d));
    }
    case 1: {
      const Rational a = rnd_nonzero(rng), d = rnd_nonzero(rng);
      Mat phi = Mat::Zero(3, 3);
      phi(0, 0) = a;
      phi(0, 1) = testutil::rnd_rational(rng);
      phi(1, 1) = d;
      phi(2, 2) = a * d;
      return yau_twist(heisenberg(), phi);
    }
    default: {
      const Rational a = rnd_nonzero(rng), b = rnd_nonzero(rng);
      Mat phi = Mat::Zero(4, 4);
      phi(0, 0) = a;
      phi(1, 1) = b;
      phi(2, 2) = a * b;
      phi(3, 3) = a * a * b;
      return yau_twist(filiform_n4(), phi);
    }
  }
}

// 4. strong nilpotency chains on random triangular-twist algebras
bool chain_soundness(std::string& detail) {
  std::mt19937 rng(20260817);
  for (int trial = 0; trial < 100; ++trial) {
    const HomAlgebra a = random_triangular_nilpotent(rng);
    const IdealChain chain = strong_nilpotency_chain(a);
    const CheckResult valid = validate_chain(a, chain);
    if (!valid.ok) {
      detail = "invalid chain on trial " + std::to_string(trial) + ": " +
               describe(valid);
      return false;
    }
    if (nilindex(a) > static_cast<Index>(chain.ideals.size())) {
      detail = "nilindex exceeds chain length on trial " +
               std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 5. free algebra dimensions against the Hall-basis count
bool free_dimensions(std::string& detail) {
  const Polynomial f = Polynomial::from_string("T-1");
  const std::pair<long, long> cases[] = {{1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 3}};
  for (const auto& [k, n] : cases) {
    long expected = 0;
    for (long d = 1; d < n; ++d) expected += oracles::witt_dimension(k, d);
    const auto built = free_multiplicative_nilpotent(k, n, f);
    if (built.first.dim() != expected) {
      detail = "M_{" + std::to_string(k) + "," + std::to_string(n) +
               ",T-1} has dim " + std::to_string(built.first.dim()) +
               ", Hall basis count is " + std::to_string(expected);
      return false;
    }
  }
  return true;
}

struct Fixture {
  std::string name;
  HomAlgebra algebra;
};

std::vector<Fixture> ado_catalog() {
  std::vector<Fixture> out;
  out.push_back({"abelian1-id", abelian(1, identity(1))});
  out.push_back({"abelian2-swap", abelian(2, swap2())});
  out.push_back({"abelian3-diag", abelian(3, diag({1, 2, 3}))});
  out.push_back({"heisenberg", heisenberg()});
  out.push_back({"heisenberg-yau", h3_lambda()});
  out.push_back({"filiform-n4", filiform_n4()});
  out.push_back({"filiform-n4-yau",
                 yau_twist(filiform_n4(), diag({2, 3, 6, 12}))});
  return out;
}

// 6. end-to-end certificates on the catalog, each fixture under 10 s
bool certificates(std::string& detail) {
  for (const Fixture& f : ado_catalog()) {
    const auto t0 = std::chrono::steady_clock::now();
    const AdoCertificate cert = ado(f.algebra);
    if (!cert.verdicts.all()) {
      detail = f.name + ": verdicts not all true";
      return false;
    }
    const CertificateReport report = verify_certificate(f.algebra, cert);
    if (!report.valid()) {
      detail = f.name + ": certificate failed re-verification";
      return false;
    }
    const auto grading = find_grading(f.algebra);
    if (!grading) {
      detail = f.name + ": expected a compatible grading";
      return false;
    }
    const Index expected = f.algebra.dim() * grading->top_degree() + 1;
    if (cert.representation.module_dim() != expected) {
      detail = f.name + ": module dim " +
               std::to_string(cert.representation.module_dim()) +
               ", graded construction promises " + std::to_string(expected);
      return false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs >= 10.0) {
      detail = f.name + " took " + std::to_string(secs) + " s";
      return false;
    }
  }
  return true;
}

// 7. embedding into (End(V)^-, Ad_beta) and back
bool theorem_a_round_trip(std::string& detail) {
  for (const Fixture& f : ado_catalog()) {
    const AdoCertificate cert = ado(f.algebra);
    const HomRepresentation& rho = cert.representation;
    const EndEmbedding emb = theorem_a_forward(rho);
    const HomAlgebra end_alg = endomorphism_hom_algebra(emb.beta);
    const HomRepresentation back =
        theorem_a_backward(rho.algebra_ptr(), end_alg, emb.map);
    if (!is_faithful(back) || !check_rep(back).ok ||
        !check_rep_multiplicative(back).ok ||
        !is_invertible(back.module_twist())) {
      detail = f.name + ": reconstructed representation failed a law";
      return false;
    }
  }
  return true;
}

// 8. the rotation twist needs a field extension on every path
bool rotation_negative_path(std::string& detail) {
  const HomAlgebra rot = abelian(2, rotation2());
  try {
    strong_nilpotency_chain(rot);
    detail = "strong_nilpotency_chain produced a chain";
    return false;
  } catch (const HomError& e) {
    if (e.code() != Err::FieldExtensionNeeded) {
      detail = std::string("chain threw ") + to_string(e.code());
      return false;
    }
  }
  try {
    AdoOptions options;
    options.force_general = true;
    ado(rot, options);
    detail = "general path produced a certificate";
    return false;
  } catch (const HomError& e) {
    if (e.code() != Err::FieldExtensionNeeded) {
      detail = std::string("general path threw ") + to_string(e.code());
      return false;
    }
  }
  return true;
}

// 9. exact file round trips plus the ado/verify-rep pipeline over the CLI
bool cli_round_trip(std::string& detail) {
  std::vector<Fixture> fixtures = ado_catalog();
  fixtures.push_back({"solvable2", solvable2()});
  fixtures.push_back({"abelian3-rotation", abelian3_rotation()});
  fixtures.push_back(
      {"current-h3", current_algebra(heisenberg(), 3).algebra});
  for (const Fixture& f : fixtures) {
    const HomAlgebra back = parse_algebra(serialize(f.algebra));
    if (!structurally_equal(back, f.algebra) ||
        back.names() != f.algebra.names()) {
      detail = f.name + ": parse of serialize is not the identity";
      return false;
    }
  }

  const char* bin = std::getenv("HL_BIN");
  if (bin == nullptr) {
    detail = "HL_BIN is not set";
    return false;
  }
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("homlie_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto run = [&](const std::string& args) {
    const std::string cmd =
        std::string(bin) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };
  for (const Fixture& f : ado_catalog()) {
    const std::string alg = (dir / (f.name + ".hla")).string();
    const std::string rep = (dir / (f.name + ".rep")).string();
    write_file(alg, serialize(f.algebra));
    if (run("ado " + alg + " --out " + rep) != 0) {
      detail = f.name + ": ado exited nonzero";
      return false;
    }
    if (run("verify-rep " + alg + " " + rep) != 0) {
      detail = f.name + ": verify-rep exited nonzero";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.criterion(1,
                 "hom-Jacobi checker agrees with the brute-force cyclic sum "
                 "on 200 random 3-dim algebras",
                 5.0, axiom_soundness);
  gate.criterion(2,
                 "tensor products of 50 random multiplicative "
                 "representations satisfy both laws",
                 10.0, tensor_law);
  gate.criterion(3,
                 "tensor nilindex bound n+m-1 holds on all fixture pairs, "
                 "adjoint nilindexes pinned",
                 0.0, tensor_nilindex_bound);
  gate.criterion(4,
                 "strong nilpotency chains verify on 100 random "
                 "triangular-twist algebras",
                 10.0, chain_soundness);
  gate.criterion(5,
                 "free algebra dimensions match the Hall-basis count on "
                 "five (k,n) pairs",
                 30.0, free_dimensions);
  gate.criterion(6,
                 "ado certificates verify end-to-end on the catalog with "
                 "graded module dimensions, each fixture under 10 s",
                 0.0, certificates);
  gate.criterion(7,
                 "every certificate embeds into (End(V)^-, Ad_beta) and "
                 "reconstructs faithfully",
                 0.0, theorem_a_round_trip);
  gate.criterion(8,
                 "rotation twist fails the chain and the forced general "
                 "path with FieldExtensionNeeded",
                 0.0, rotation_negative_path);
  gate.criterion(9,
                 "file round trips are exact and the CLI ado/verify-rep "
                 "pipeline exits 0 on the catalog",
                 0.0, cli_round_trip);
  if (gate.failed > 0) {
    std::printf("%d of 9 criteria failed\n", gate.failed);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
