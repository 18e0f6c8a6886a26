#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "homlie/ado.hpp"
#include "homlie/errors.hpp"
#include "homlie/free_nilpotent.hpp"
#include "homlie/hom_algebra.hpp"
#include "homlie/hom_associative.hpp"
#include "homlie/io.hpp"
#include "homlie/polynomial.hpp"
#include "homlie/representation.hpp"

using namespace homlie;
using nlohmann::json;

namespace {

HomAlgebra load_algebra(const std::string& path) {
  return parse_algebra(read_file(path));
}

std::string dir_of(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

/// Certificate files carry verdict/nilindex/trace lines; plain
/// representation files never do.
bool looks_like_certificate(const std::string& text) {
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    const std::string line =
        text.substr(pos, eol == std::string::npos ? eol : eol - pos);
    const size_t p = line.find_first_not_of(" \t");
    if (p != std::string::npos)
      for (const char* kw : {"verdict", "nilindex", "trace"}) {
        const size_t n = std::string(kw).size();
        if (line.compare(p, n, kw) == 0 &&
            (p + n == line.size() || line[p + n] == ' ' ||
             line[p + n] == '\t'))
          return true;
      }
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return false;
}

HomRepresentation load_representation(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_certificate(text))
    return parse_certificate(text, dir_of(path)).representation;
  return parse_representation(text, dir_of(path));
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

json check_json(const CheckResult& r) {
  json j{{"ok", r.ok}};
  if (!r.ok) j["detail"] = describe(r);
  return j;
}

void print_law(const std::string& name, const CheckResult& r) {
  std::cout << name << ": " << bool_str(r.ok);
  if (!r.ok) std::cout << " (" << describe(r) << ")";
  std::cout << '\n';
}

/// Writes `text` to `out` when given, otherwise prints it raw so the
/// command can be piped into another file.
void emit_payload(const std::string& text, const std::string& out,
                  bool jsonmode, const char* key, json extra = json::object()) {
  if (!out.empty()) {
    write_file(out, text);
    if (jsonmode) {
      extra["written"] = out;
      std::cout << extra.dump(2) << '\n';
    }
    return;
  }
  if (jsonmode) {
    extra[key] = text;
    std::cout << extra.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int run_check(const std::string& path, bool jsonmode) {
  const HomAlgebra a = load_algebra(path);
  const bool lie = a.flavor() == Flavor::lie;
  const char* law_name = lie ? "hom-lie" : "hom-associative";
  const CheckResult law = lie ? check_hom_lie(a) : check_hom_associative(a);
  const CheckResult mult = check_multiplicative(a);
  const CheckResult nondeg = check_nondegenerate(a);
  const bool all = law.ok && mult.ok && nondeg.ok;
  if (jsonmode) {
    json j{{"command", "check"},
           {"flavor", to_string(a.flavor())},
           {"laws",
            {{law_name, check_json(law)},
             {"multiplicative", check_json(mult)},
             {"nondegenerate", check_json(nondeg)}}},
           {"ok", all}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "flavor: " << to_string(a.flavor()) << '\n';
    print_law(law_name, law);
    print_law("multiplicative", mult);
    print_law("nondegenerate", nondeg);
  }
  return all ? 0 : 1;
}

int run_info(const std::string& path, bool jsonmode) {
  const HomAlgebra a = load_algebra(path);
  const bool mult = check_multiplicative(a).ok;
  const bool nondeg = check_nondegenerate(a).ok;
  const LowerCentralSeries lcs = lower_central_series(a);
  const Index center_dim = center(a).dim();
  std::vector<Index> dims;
  for (const Subspace& s : lcs.terms) dims.push_back(s.dim());
  if (jsonmode) {
    json j{{"command", "info"},
           {"dim", a.dim()},
           {"flavor", to_string(a.flavor())},
           {"multiplicative", mult},
           {"nondegenerate", nondeg},
           {"nilpotent", lcs.nilindex.has_value()},
           {"center_dim", center_dim},
           {"lower_central_series_dims", dims}};
    j["nilindex"] = lcs.nilindex ? json(*lcs.nilindex) : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "dim: " << a.dim() << '\n'
              << "flavor: " << to_string(a.flavor()) << '\n'
              << "multiplicative: " << bool_str(mult) << '\n'
              << "nondegenerate: " << bool_str(nondeg) << '\n'
              << "nilpotent: " << bool_str(lcs.nilindex.has_value()) << '\n';
    std::cout << "nilindex: ";
    if (lcs.nilindex)
      std::cout << *lcs.nilindex << '\n';
    else
      std::cout << "-\n";
    std::cout << "center dim: " << center_dim << '\n'
              << "lower central series dims:";
    for (Index d : dims) std::cout << ' ' << d;
    std::cout << '\n';
  }
  return 0;
}

int run_present(const std::string& path, bool jsonmode) {
  const HomAlgebra a = load_algebra(path);
  const QuotientPresentation qp = present_as_quotient(a);
  if (jsonmode) {
    json j{{"command", "present"},
           {"generators", qp.generators},
           {"class", qp.nilindex},
           {"poly", qp.twist_poly.str()},
           {"free_dim", qp.free_presentation.algebra.dim()},
           {"kernel_dim", qp.kernel_ideal.dim()}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "generators: " << qp.generators << '\n'
              << "class: " << qp.nilindex << '\n'
              << "poly: " << qp.twist_poly.str() << '\n'
              << "free dim: " << qp.free_presentation.algebra.dim() << '\n'
              << "kernel dim: " << qp.kernel_ideal.dim() << '\n';
  }
  return 0;
}

int run_ado(const std::string& path, long long bound, const std::string& out,
            const std::string& cert_out, bool jsonmode) {
  const HomAlgebra a = load_algebra(path);
  AdoOptions options;
  options.tensor_bound = static_cast<Index>(bound);
  const AdoCertificate cert = ado(a, options);
  if (!out.empty()) write_file(out, serialize(cert.representation));
  if (!cert_out.empty()) write_file(cert_out, serialize(cert));
  if (jsonmode) {
    json j{{"command", "ado"},
           {"module_dim", cert.representation.module_dim()},
           {"verdicts",
            {{"faithful", cert.verdicts.faithful},
             {"nilpotent", cert.verdicts.nilpotent},
             {"multiplicative", cert.verdicts.multiplicative},
             {"nondegenerate", cert.verdicts.nondegenerate},
             {"nilindex", cert.verdicts.nilindex}}},
           {"trace", cert.trace}};
    if (!out.empty()) j["written"] = out;
    if (!cert_out.empty()) j["certificate_written"] = cert_out;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "module dim: " << cert.representation.module_dim() << '\n'
              << "faithful: " << bool_str(cert.verdicts.faithful) << '\n'
              << "nilpotent: " << bool_str(cert.verdicts.nilpotent) << '\n'
              << "multiplicative: " << bool_str(cert.verdicts.multiplicative)
              << '\n'
              << "nondegenerate: " << bool_str(cert.verdicts.nondegenerate)
              << '\n'
              << "nilindex: " << cert.verdicts.nilindex << '\n';
    for (const std::string& t : cert.trace) std::cout << "trace: " << t << '\n';
  }
  return cert.verdicts.all() ? 0 : 1;
}

int run_verify(const std::string& alg_path, const std::string& rep_path,
               bool jsonmode) {
  const HomAlgebra a = load_algebra(alg_path);
  const std::string text = read_file(rep_path);
  const bool is_cert = looks_like_certificate(text);
  AdoCertificate cert =
      is_cert ? parse_certificate(text, dir_of(rep_path))
              : AdoCertificate{parse_representation(text, dir_of(rep_path)),
                               CertificateVerdicts{}, {}};
  const CertificateReport report = verify_certificate(a, cert);
  const bool laws = report.representation.ok && report.faithful.ok &&
                    report.nilpotent.ok && report.multiplicative.ok &&
                    report.nondegenerate.ok;
  const bool ok = is_cert ? report.valid() : laws;
  if (jsonmode) {
    json j{{"command", "verify-rep"},
           {"kind", is_cert ? "certificate" : "representation"},
           {"checks",
            {{"representation", check_json(report.representation)},
             {"faithful", check_json(report.faithful)},
             {"nilpotent", check_json(report.nilpotent)},
             {"multiplicative", check_json(report.multiplicative)},
             {"nondegenerate", check_json(report.nondegenerate)}}},
           {"recomputed_nilindex", report.recomputed.nilindex},
           {"valid", ok}};
    if (is_cert) j["claims_match"] = report.claims_match;
    std::cout << j.dump(2) << '\n';
  } else {
    print_law("representation law", report.representation);
    print_law("faithful", report.faithful);
    print_law("nilpotent", report.nilpotent);
    print_law("multiplicative", report.multiplicative);
    print_law("nondegenerate", report.nondegenerate);
    if (report.recomputed.nilpotent)
      std::cout << "recomputed nilindex: " << report.recomputed.nilindex
                << '\n';
    if (is_cert)
      std::cout << "claims match: " << bool_str(report.claims_match) << '\n';
    std::cout << (is_cert ? "certificate: " : "representation: ")
              << (ok ? "valid" : "invalid") << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for Hom-Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json sit before or after the subcommand
  bool jsonmode = false;
  app.add_flag("--json", jsonmode, "machine-readable reports");

  std::string alg_file, second_file, out_file, cert_file, endo_file, poly_text;
  long long current_n = 2, gens = 0, nil_class = 0, tensor_bound = 4;

  CLI::App* c_check =
      app.add_subcommand("check", "verify the defining laws of an algebra");
  c_check->add_option("file", alg_file, "algebra file")->required();

  CLI::App* c_info = app.add_subcommand(
      "info", "center, lower central series, nilindex and predicates");
  c_info->add_option("file", alg_file, "algebra file")->required();

  CLI::App* c_yau = app.add_subcommand(
      "yau-twist", "twist a Lie algebra along an endomorphism");
  c_yau->add_option("file", alg_file, "algebra file")->required();
  c_yau->add_option("--endo", endo_file, "endomorphism matrix file")
      ->required();
  c_yau->add_option("--out", out_file, "write the result here");

  CLI::App* c_untwist = app.add_subcommand(
      "untwist", "recover the Lie algebra behind an invertible twist");
  c_untwist->add_option("file", alg_file, "algebra file")->required();
  c_untwist->add_option("--out", out_file, "write the result here");

  CLI::App* c_current =
      app.add_subcommand("current", "current algebra over t K[t]/(t^n)");
  c_current->add_option("file", alg_file, "algebra file")->required();
  c_current->add_option("--n", current_n, "truncation exponent")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* c_free = app.add_subcommand(
      "free", "free multiplicative nilpotent Hom-Lie algebra");
  c_free->add_option("--gens", gens, "generator count")
      ->required()
      ->check(CLI::PositiveNumber);
  c_free->add_option("--class", nil_class, "nilindex bound")
      ->required()
      ->check(CLI::PositiveNumber);
  c_free->add_option("--poly", poly_text, "monic twist polynomial, e.g. T-1")
      ->required();
  c_free->add_option("--out", out_file, "write the result here");

  CLI::App* c_present = app.add_subcommand(
      "present", "present the algebra as a free algebra quotient");
  c_present->add_option("file", alg_file, "algebra file")->required();

  CLI::App* c_ado = app.add_subcommand(
      "ado", "build a certified faithful nilpotent representation");
  c_ado->add_option("file", alg_file, "algebra file")->required();
  c_ado->add_option("--tensor-bound", tensor_bound,
                    "tensor powers tried in distinguishing searches")
      ->check(CLI::NonNegativeNumber);
  c_ado->add_option("--out", out_file, "write the representation here");
  c_ado->add_option("--cert", cert_file, "write the full certificate here");

  CLI::App* c_verify = app.add_subcommand(
      "verify-rep", "recompute every law of a representation or certificate");
  c_verify->add_option("algebra", alg_file, "algebra file")->required();
  c_verify->add_option("file", second_file, "representation or certificate")
      ->required();

  CLI::App* c_tensor =
      app.add_subcommand("tensor-rep", "tensor product of two representations");
  c_tensor->add_option("left", alg_file, "representation file")->required();
  c_tensor->add_option("right", second_file, "representation file")->required();
  c_tensor->add_option("--out", out_file, "write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (*c_check) return run_check(alg_file, jsonmode);
    if (*c_info) return run_info(alg_file, jsonmode);
    if (*c_yau) {
      const HomAlgebra a = load_algebra(alg_file);
      const Mat phi = parse_matrix(read_file(endo_file));
      emit_payload(serialize(yau_twist(a, phi)), out_file, jsonmode,
                   "algebra", json{{"command", "yau-twist"}});
      return 0;
    }
    if (*c_untwist) {
      emit_payload(serialize(untwist(load_algebra(alg_file))), out_file,
                   jsonmode, "algebra", json{{"command", "untwist"}});
      return 0;
    }
    if (*c_current) {
      const CurrentAlgebra cur =
          current_algebra(load_algebra(alg_file), static_cast<Index>(current_n));
      emit_payload(serialize(cur.algebra), out_file, jsonmode, "algebra",
                   json{{"command", "current"}, {"dim", cur.algebra.dim()}});
      return 0;
    }
    if (*c_free) {
      const auto built = free_multiplicative_nilpotent(
          static_cast<Index>(gens), static_cast<Index>(nil_class),
          Polynomial::from_string(poly_text));
      emit_payload(serialize(built.first), out_file, jsonmode, "algebra",
                   json{{"command", "free"}, {"dim", built.first.dim()}});
      return 0;
    }
    if (*c_present) return run_present(alg_file, jsonmode);
    if (*c_ado)
      return run_ado(alg_file, tensor_bound, out_file, cert_file, jsonmode);
    if (*c_verify) return run_verify(alg_file, second_file, jsonmode);
    if (*c_tensor) {
      const HomRepresentation product = tensor_rep(
          load_representation(alg_file), load_representation(second_file));
      emit_payload(serialize(product), out_file, jsonmode, "representation",
                   json{{"command", "tensor-rep"},
                        {"module_dim", product.module_dim()}});
      return 0;
    }
  } catch (const HomError& e) {
    if (jsonmode) {
      const json j{{"error",
                    {{"code", to_string(e.code())}, {"message", e.what()}}}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
