// Command line front end: generation, axiom checks, braid invariants,
// cohomology and the guitar-map machinery over JSON structure files.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ybt/braid.hpp"
#include "ybt/cohomology.hpp"
#include "ybt/io.hpp"
#include "ybt/optable.hpp"
#include "ybt/sigma.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& values, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join_ll(const std::vector<long long>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<int> parse_tuple(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError("tuple entry '" + token + "' is not an integer");
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

long long parse_ll(const std::string& token, const char* what) {
  try {
    size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " '" + token + "' is not an integer");
  }
}

const ybt::OpTable& require_magma(const ybt::StructureFile& file,
                                  const std::string& path) {
  if (!file.is_magma())
    throw UsageError(path + " holds a sigma table; a magma file is required");
  return file.magma();
}

const ybt::SigmaTable& require_sigma(const ybt::StructureFile& file,
                                     const std::string& path) {
  if (file.is_magma())
    throw UsageError(path + " holds a magma; a sigma file is required");
  return file.sigma();
}

void print_bool(const char* name, bool v) {
  std::printf("%s: %s\n", name, v ? "true" : "false");
}

int run_check(const std::string& path) {
  const auto file = ybt::load_structure(path);
  if (file.is_magma()) {
    const auto& op = file.magma();
    const auto report = ybt::axiom_report(op);
    std::printf("kind: magma\nsize: %d\n", op.size());
    print_bool("shelf", report.is_shelf);
    print_bool("rack", report.is_rack);
    print_bool("quandle", report.is_quandle);
    if (report.first_violation) {
      const auto& v = *report.first_violation;
      std::printf("first violation: %s at (%d, %d, %d)\n", v.axiom.c_str(),
                  v.witness[0], v.witness[1], v.witness[2]);
    }
  } else {
    const auto& sigma = file.sigma();
    const auto report = ybt::check_birack(sigma);
    std::printf("kind: sigma\nsize: %d\n", sigma.size());
    print_bool("braided", report.is_braided);
    print_bool("invertible", report.is_invertible);
    print_bool("left-nondegenerate", report.is_left_nondegenerate);
    print_bool("right-nondegenerate", report.is_right_nondegenerate);
    print_bool("birack", report.is_birack);
    print_bool("biquandle", report.is_biquandle);
    if (report.t_map) std::printf("t-map: %s\n", join(*report.t_map).c_str());
    if (report.first_violation) {
      const auto& v = *report.first_violation;
      std::printf("first violation: %s at (%s)\n", v.axiom.c_str(),
                  join(v.data, ", ").c_str());
    }
  }
  return 0;
}

int run_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path) {
  auto expect_params = [&](size_t count) {
    if (params.size() != count)
      throw UsageError("family '" + family + "' takes " +
                       std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
  };
  ybt::StructureFile out{ybt::make_trivial_quandle(1), {}};
  out.metadata.family = family;

  if (family == "trivial") {
    expect_params(1);
    const long long m = parse_ll(params[0], "size");
    out.payload = ybt::make_trivial_quandle(static_cast<int>(m));
    out.metadata.params = {m};
  } else if (family == "conj-sym") {
    expect_params(1);
    const long long k = parse_ll(params[0], "letters");
    out.payload =
        ybt::make_conjugation_quandle(ybt::make_symmetric_group(static_cast<int>(k)));
    out.metadata.params = {k};
  } else if (family == "alexander") {
    expect_params(2);
    const long long m = parse_ll(params[0], "size");
    const long long t = parse_ll(params[1], "parameter");
    out.payload = ybt::make_alexander_quandle(static_cast<int>(m),
                                              static_cast<int>(t));
    out.metadata.params = {m, t};
  } else if (family == "laver") {
    expect_params(1);
    const long long k = parse_ll(params[0], "index");
    out.payload = ybt::make_laver_table(static_cast<int>(k));
    out.metadata.params = {k};
  } else if (family == "flip") {
    expect_params(1);
    const long long m = parse_ll(params[0], "size");
    out.payload = ybt::make_flip(static_cast<int>(m));
    out.metadata.params = {m};
  } else if (family == "sigma-sd") {
    expect_params(1);
    const auto input = ybt::load_structure(params[0]);
    out.payload = ybt::sigma_from_shelf(require_magma(input, params[0]));
  } else if (family == "sigma-ass") {
    expect_params(2);
    const auto input = ybt::load_structure(params[0]);
    const long long unit = parse_ll(params[1], "unit");
    out.payload = ybt::sigma_from_monoid(require_magma(input, params[0]),
                                         static_cast<int>(unit));
    out.metadata.params = {unit};
  } else {
    throw UsageError("unknown family '" + family +
                     "'; expected trivial | conj-sym | alexander | laver | "
                     "flip | sigma-sd | sigma-ass");
  }
  ybt::save_structure(out_path, out);
  return 0;
}

int run_structure_rack(const std::string& path, const std::string& out_path) {
  const auto file = ybt::load_structure(path);
  ybt::StructureFile out{ybt::structure_rack(require_sigma(file, path)), {}};
  out.metadata.family = "structure-rack";
  ybt::save_structure(out_path, out);
  return 0;
}

int run_guitar(const std::string& path, const std::string& tuple_text,
               bool inverse, int entwine) {
  const auto file = ybt::load_structure(path);
  const auto& sigma = require_sigma(file, path);
  if (entwine > 0) {
    const auto report = ybt::entwining_check(sigma, entwine);
    print_bool("entwining", report.ok);
    if (!report.ok)
      std::printf("witness: i=%d input=(%s) sigma-then-j=(%s) "
                  "j-then-sigma'=(%s)\n",
                  report.position, join(report.input).c_str(),
                  join(report.via_sigma_then_j).c_str(),
                  join(report.via_j_then_sigma_prime).c_str());
    return 0;
  }
  if (tuple_text.empty())
    throw UsageError("guitar needs --tuple or --verify-entwine");
  auto tuple = parse_tuple(tuple_text);
  for (int v : tuple)
    if (v < 0 || v >= sigma.size())
      throw UsageError("tuple entry " + std::to_string(v) +
                       " out of range for size " +
                       std::to_string(sigma.size()));
  const auto result = inverse ? ybt::guitar_inverse(sigma, std::move(tuple))
                              : ybt::guitar_map(sigma, std::move(tuple));
  std::printf("%s\n", join(result).c_str());
  return 0;
}

int run_color(const std::string& path, const std::string& braid, int strands,
              bool closure) {
  const auto file = ybt::load_structure(path);
  const auto& sigma = require_sigma(file, path);
  const auto word = ybt::parse_braid(braid, strands);
  if (closure) {
    std::printf("%lld\n", ybt::coloring_count_closure(sigma, word));
    return 0;
  }
  const long long total = ybt::power(sigma.size(), strands);
  for (long long rank = 0; rank < total; ++rank) {
    const auto input = ybt::tuple_unrank(rank, strands, sigma.size());
    const auto output = ybt::act(sigma, word, input);
    std::printf("%s -> %s\n", join(input).c_str(), join(output).c_str());
  }
  return 0;
}

int run_weight(const std::string& path, const std::string& cocycle_path,
               const std::string& braid, int strands, bool closure) {
  const auto file = ybt::load_structure(path);
  const auto& sigma = require_sigma(file, path);
  const auto phi = ybt::load_cochain(cocycle_path);
  const auto word = ybt::parse_braid(braid, strands);
  if (closure) {
    const auto inv = ybt::weight_polynomial_closure(sigma, phi, word);
    std::printf("%s\n", join_ll(inv.weight_polynomial).c_str());
    return 0;
  }
  for (const auto& row : ybt::weight_table(sigma, phi, word))
    std::printf("%s -> %s weight %lld\n", join(row.input).c_str(),
                join(row.output).c_str(), row.weight);
  return 0;
}

ybt::Complex make_complex(const ybt::StructureFile& file,
                          const std::string& path, const std::string& kind,
                          bool quandle_sub, int degree) {
  using ybt::Subspace;
  if (kind == "rack") {
    return ybt::Complex::rack(
        require_magma(file, path),
        quandle_sub ? Subspace::quandle_degenerate : Subspace::full);
  }
  if (kind == "braided") {
    if (quandle_sub && degree != 2)
      throw UsageError(
          "--quandle-sub with --kind braided is defined for --deg 2 only");
    return ybt::Complex::braided(
        require_sigma(file, path),
        quandle_sub ? Subspace::braided_biquandle_deg2 : Subspace::full);
  }
  if (kind == "birack") {
    return ybt::Complex::birack(
        require_sigma(file, path),
        quandle_sub ? Subspace::quandle_degenerate : Subspace::full);
  }
  throw UsageError("unknown --kind '" + kind +
                   "'; expected rack | braided | birack");
}

int run_cohomology(const std::string& path, const std::string& kind,
                   bool quandle_sub, int degree, long long modulus,
                   bool basis) {
  const auto file = ybt::load_structure(path);
  const auto complex = make_complex(file, path, kind, quandle_sub, degree);
  const auto group = complex.cohomology(degree, modulus);
  std::printf("H^%d = %s\n", degree, group.to_string().c_str());
  if (basis)
    for (const auto& f : complex.cocycle_basis(degree, modulus))
      std::printf("cocycle: %s\n", join_ll(f.values()).c_str());
  return 0;
}

int run_iso_check(const std::string& path, int degree, long long modulus) {
  const auto file = ybt::load_structure(path);
  const auto& sigma = require_sigma(file, path);
  if (!ybt::check_birack(sigma).is_birack)
    throw std::invalid_argument("iso-check requires a birack");
  std::printf("convention: compose-J\n");
  for (int k = 1; k <= degree; ++k) {
    const long long dim = ybt::power(sigma.size(), k);
    for (long long r = 0; r < dim; ++r) {
      const auto tuple = ybt::tuple_unrank(r, k, sigma.size());
      const auto f = ybt::Cochain::delta(tuple, modulus, sigma.size());
      const auto lhs = ybt::d_braided(sigma, ybt::pullback_guitar(sigma, f));
      const auto rhs = ybt::pullback_guitar(sigma, ybt::d_birack(sigma, f));
      if (lhs != rhs) {
        std::printf("chain map d_Br o J* = J* o d_Bir: FAILED in degree %d\n",
                    k);
        return 1;
      }
    }
  }
  std::printf("chain map d_Br o J* = J* o d_Bir: verified for degrees 1..%d "
              "mod %lld\n",
              degree, modulus);
  return 0;
}

int run_cup(const std::string& path, const std::string& left_path,
            const std::string& right_path, const std::string& out_path) {
  const auto file = ybt::load_structure(path);
  const auto& sigma = require_sigma(file, path);
  const auto f = ybt::load_cochain(left_path);
  const auto g = ybt::load_cochain(right_path);
  ybt::save_cochain(out_path, ybt::cup_product(sigma, f, g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite self-distributive structures and set-theoretic "
               "Yang-Baxter solutions: axiom checks, braid coloring "
               "invariants, cocycle weights and cohomology."};
  app.require_subcommand(1);

  std::string file, out_path, family, braid, cocycle_path, tuple_text;
  std::string kind, left_path, right_path;
  std::vector<std::string> params;
  int strands = 2, degree = 2, entwine = 0;
  long long modulus = 2;
  bool closure = false, inverse = false, quandle_sub = false, basis = false;

  auto* check = app.add_subcommand("check", "Report the axioms a file satisfies");
  check->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "Generate a structure file");
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("-o,--output", out_path)->required();

  auto* sr = app.add_subcommand("structure-rack",
                                "Extract the structure rack of a birack");
  sr->add_option("file", file)->required();
  sr->add_option("-o,--output", out_path)->required();

  auto* guitar = app.add_subcommand("guitar", "Apply the guitar map");
  guitar->add_option("file", file)->required();
  guitar->add_option("--tuple", tuple_text);
  guitar->add_flag("--inverse", inverse);
  guitar->add_option("--verify-entwine", entwine);

  auto* color = app.add_subcommand("color", "Braid coloring action");
  color->add_option("file", file)->required();
  color->add_option("--braid", braid)->required();
  color->add_option("--strands", strands)->required();
  color->add_flag("--closure", closure);

  auto* weight = app.add_subcommand("weight", "Cocycle weights of a braid");
  weight->add_option("file", file)->required();
  weight->add_option("--cocycle", cocycle_path)->required();
  weight->add_option("--braid", braid)->required();
  weight->add_option("--strands", strands)->required();
  weight->add_flag("--closure", closure);

  auto* coh = app.add_subcommand("cohomology", "Cohomology groups");
  coh->add_option("file", file)->required();
  coh->add_option("--kind", kind)->required();
  coh->add_flag("--quandle-sub", quandle_sub);
  coh->add_option("--deg", degree)->required();
  coh->add_option("--mod", modulus)->required();
  coh->add_flag("--basis", basis);

  auto* iso = app.add_subcommand("iso-check",
                                 "Verify the guitar-map chain isomorphism");
  iso->add_option("file", file)->required();
  iso->add_option("--deg", degree)->required();
  iso->add_option("--mod", modulus)->required();

  auto* cup = app.add_subcommand("cup", "Cup product of two cochains");
  cup->add_option("file", file)->required();
  cup->add_option("--left", left_path)->required();
  cup->add_option("--right", right_path)->required();
  cup->add_option("-o,--output", out_path)->required();

  try {
    app.parse(argc, argv);
    if (check->parsed()) return run_check(file);
    if (gen->parsed()) return run_gen(family, params, out_path);
    if (sr->parsed()) return run_structure_rack(file, out_path);
    if (guitar->parsed())
      return run_guitar(file, tuple_text, inverse, entwine);
    if (color->parsed()) return run_color(file, braid, strands, closure);
    if (weight->parsed())
      return run_weight(file, cocycle_path, braid, strands, closure);
    if (coh->parsed())
      return run_cohomology(file, kind, quandle_sub, degree, modulus, basis);
    if (iso->parsed()) return run_iso_check(file, degree, modulus);
    if (cup->parsed()) return run_cup(file, left_path, right_path, out_path);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const ybt::BraidParseError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const ybt::SchemaError& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return 3;
  } catch (const ybt::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
