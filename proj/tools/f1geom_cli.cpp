// f1geom: counting points and zeta functions of toric F_1-varieties,
// hermitian lattices and the quadric xy - zt + uv = 0.
//
// Exit status: 0 success, 1 usage error, 2 validation or math error.

#include "f1geom/fan_io.hpp"
#include "f1geom/ffield_oracle.hpp"
#include "f1geom/hermitian_lattice.hpp"
#include "f1geom/quadric_strata.hpp"
#include "f1geom/stable_jhom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

namespace {

using namespace f1;
using Json = nlohmann::ordered_json;

constexpr int kExitMath = 2;

// Decimal numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

Json poly_json(const CountPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_json(c));
  return out;
}

Json zeta_json(const ZetaFunction& z) {
  Json out = Json::array();
  for (const auto& f : z.factors) out.push_back(Json::array({f.root, integer_json(f.multiplicity)}));
  return out;
}

void report(const Json& j) { std::cout << j.dump() << '\n'; }

struct Options {
  std::string file;
  std::optional<long> fq;
  std::optional<long> f1n;
  bool poly = false;
  std::string phi_file;
  int t = 0;
  std::vector<long> primes{2, 3, 5};
  long inject_offset = 0;
  int i = 2;
  long nmax = 200;
};

void require_one_mode(const Options& o, bool allow_fq) {
  const int modes = (allow_fq && o.fq ? 1 : 0) + (o.f1n ? 1 : 0) + (o.poly ? 1 : 0);
  if (modes != 1)
    throw CLI::ValidationError(allow_fq ? "exactly one of --fq, --f1n, --poly is required"
                                        : "exactly one of --f1n, --poly is required");
}

int fan_info(const Options& o) {
  const Fan f = parse_fan(read_text_file(o.file));
  const auto n = fan_count_poly(f);
  const bool complete = is_complete(f);
  std::cout << "rank " << f.rank() << ", " << f.rays().size() << " rays, " << f.cones().size() << " cones, "
            << f.maximal_cones().size() << " maximal" << (complete ? ", complete" : "") << '\n'
            << "N(x) = " << n.to_string() << '\n'
            << "euler characteristic " << euler_char(n) << '\n';
  report({{"command", "fan info"},
          {"rank", f.rank()},
          {"rays", f.rays().size()},
          {"cones", f.cones().size()},
          {"maximal_cones", f.maximal_cones().size()},
          {"complete", complete},
          {"poly", poly_json(n)},
          {"euler_char", integer_json(euler_char(n))}});
  return 0;
}

int fan_validate(const Options& o) {
  const Fan f = parse_fan(read_text_file(o.file));
  std::cout << "valid regular fan\n" << serialize_fan(f);
  report({{"command", "fan validate"}, {"valid", true}, {"cones", f.cones().size()}});
  return 0;
}

int count_fan(const Options& o) {
  require_one_mode(o, true);
  const Fan f = parse_fan(read_text_file(o.file));
  const auto n = fan_count_poly(f);
  if (o.poly) {
    std::cout << "N(x) = " << n.to_string() << '\n';
    report({{"command", "count fan"}, {"poly", poly_json(n)}});
  } else if (o.fq) {
    const Integer c = toric_count_fq(f, PrimeField(*o.fq));
    std::cout << "#X(F_" << *o.fq << ") = " << c << '\n';
    report({{"command", "count fan"}, {"fq", *o.fq}, {"count", integer_json(c)}});
  } else {
    const Integer c(glued_points(f, CyclotomicIndex(*o.f1n)).size());
    std::cout << "#X(F_1^" << *o.f1n << ") = " << c << " (N(" << 2 * *o.f1n + 1 << ") = " << n(2 * *o.f1n + 1)
              << ")\n";
    report({{"command", "count fan"}, {"f1n", *o.f1n}, {"count", integer_json(c)}});
  }
  return 0;
}

int count_quadric(const Options& o) {
  require_one_mode(o, true);
  const auto n = quadric_count_poly();
  if (o.poly) {
    std::cout << "N(x) = " << n.to_string() << '\n';
    report({{"command", "count quadric"}, {"poly", poly_json(n)}});
  } else if (o.fq) {
    const Integer c = quadric_count_fq(PrimeField(*o.fq));
    std::cout << "#Q(F_" << *o.fq << ") = " << c << '\n';
    report({{"command", "count quadric"}, {"fq", *o.fq}, {"count", integer_json(c)}});
  } else {
    const auto strata = quadric_stratum_f1_counts(CyclotomicIndex(*o.f1n));
    const Integer c = quadric_f1_count(CyclotomicIndex(*o.f1n));
    std::cout << "#Q(F_1^" << *o.f1n << ") = " << c << " = " << strata[0] << " + " << strata[1] << " + "
              << strata[2] << " + " << strata[3] << '\n';
    Json parts = Json::array();
    for (const auto& s : strata) parts.push_back(integer_json(s));
    report({{"command", "count quadric"}, {"f1n", *o.f1n}, {"count", integer_json(c)}, {"strata", parts}});
  }
  return 0;
}

int count_lattice(const Options& o) {
  require_one_mode(o, false);
  const PhiSystem phi = parse_phi(read_text_file(o.phi_file));
  if (o.poly) {
    const auto rational = rational_count_poly(phi);
    Json coeffs = Json::array();
    for (const auto& c : rational) coeffs.push_back(c.str());
    try {
      const auto n = count_poly(phi);
      std::cout << "N(x) = " << n.to_string() << '\n';
      report({{"command", "count lattice"}, {"t", phi.t()}, {"poly", poly_json(n)}});
      return 0;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonIntegralCoefficient) throw;
      std::cerr << "error: " << e.what() << '\n';
      std::cout << "rational interpolant, low to high: " << coeffs.dump() << '\n';
      report({{"command", "count lattice"}, {"t", phi.t()}, {"error", e.what()}, {"rational_poly", coeffs}});
      return kExitMath;
    }
  }
  const CyclotomicIndex n(*o.f1n);
  const Integer formula = count_points_formula(phi, n);
  std::cout << "#X(F_1^" << *o.f1n << ") = " << formula << '\n';
  report({{"command", "count lattice"}, {"t", phi.t()}, {"f1n", *o.f1n}, {"count", integer_json(formula)}});
  return 0;
}

int zeta_of(const std::string& what, const CountPolynomial& n) {
  const auto z = zeta(n);
  std::cout << "zeta(s) = " << z.to_string() << '\n';
  report({{"command", "zeta " + what}, {"poly", poly_json(n)}, {"zeta", zeta_json(z)}});
  return 0;
}

int oracle_compare(const Options& o) {
  const Fan f = parse_fan(read_text_file(o.file));
  const auto n = fan_count_poly(f) + CountPolynomial::constant(o.inject_offset);
  bool all = true;
  Json rows = Json::array();
  for (const auto& c : compare_with_oracle(n, f, o.primes)) {
    all = all && c.agrees();
    std::cout << "p = " << c.prime << ": formula " << c.formula << ", enumeration " << c.oracle
              << (c.agrees() ? "" : "  MISMATCH") << '\n';
    rows.push_back({{"prime", c.prime}, {"formula", integer_json(c.formula)}, {"oracle", integer_json(c.oracle)}});
  }
  report({{"command", "oracle compare fan"}, {"agree", all}, {"results", rows}});
  if (!all) std::cerr << "error: " << to_string(ErrorKind::OracleMismatch) << ": formula and enumeration differ\n";
  return all ? 0 : kExitMath;
}

int imj(const Options& o) {
  const Integer w = w_bernoulli(o.i);
  const auto stable = w_gcd_stable(o.i, o.nmax);
  const bool agree = w == stable.value;
  std::cout << "w_" << o.i << " = " << w << " (denominator of b_" << o.i << "/" << 2 * o.i << "), gcd over n <= "
            << o.nmax << " with j = " << stable.j << ": " << stable.value
            << (agree ? ", methods agree" : ", methods DISAGREE") << '\n';
  report({{"command", "imj"},
          {"i", o.i},
          {"w", integer_json(w)},
          {"w_gcd", integer_json(stable.value)},
          {"j", stable.j},
          {"agree", agree}});
  return agree ? 0 : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Points and zeta functions of varieties over F_1"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* fan = app.add_subcommand("fan", "Inspect a fan document")->require_subcommand(1);
  auto* info = fan->add_subcommand("info", "Summary and counting polynomial");
  info->add_option("file", o.file, "Fan JSON document")->required()->check(CLI::ExistingFile);
  info->callback([&] { action = [&] { return fan_info(o); }; });
  auto* validate = fan->add_subcommand("validate", "Check and print the canonical document");
  validate->add_option("file", o.file, "Fan JSON document")->required()->check(CLI::ExistingFile);
  validate->callback([&] { action = [&] { return fan_validate(o); }; });

  auto* count = app.add_subcommand("count", "Point counts")->require_subcommand(1);
  auto add_modes = [&](CLI::App* cmd, bool fq) {
    if (fq) cmd->add_option("--fq", o.fq, "Count over the prime field F_p");
    cmd->add_option("--f1n", o.f1n, "Count F_1^n-points")->check(CLI::PositiveNumber);
    cmd->add_flag("--poly", o.poly, "Print the counting polynomial");
  };
  auto* count_fan_cmd = count->add_subcommand("fan", "Points of a toric variety");
  count_fan_cmd->add_option("file", o.file, "Fan JSON document")->required()->check(CLI::ExistingFile);
  add_modes(count_fan_cmd, true);
  count_fan_cmd->callback([&] { action = [&] { return count_fan(o); }; });
  auto* count_quadric_cmd = count->add_subcommand("quadric", "Points of xy - zt + uv = 0 in P^5");
  add_modes(count_quadric_cmd, true);
  count_quadric_cmd->callback([&] { action = [&] { return count_quadric(o); }; });
  auto* count_lattice_cmd = count->add_subcommand("lattice", "Points of a hermitian lattice");
  count_lattice_cmd->add_option("--phi", o.phi_file, "Phi JSON document")->required()->check(CLI::ExistingFile);
  add_modes(count_lattice_cmd, false);
  count_lattice_cmd->callback([&] { action = [&] { return count_lattice(o); }; });

  auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function as a factor list")->require_subcommand(1);
  auto* zeta_fan = zeta_cmd->add_subcommand("fan", "Zeta function of a toric variety");
  zeta_fan->add_option("file", o.file, "Fan JSON document")->required()->check(CLI::ExistingFile);
  zeta_fan->callback([&] { action = [&] { return zeta_of("fan", fan_count_poly(parse_fan(read_text_file(o.file)))); }; });
  zeta_cmd->add_subcommand("quadric", "Zeta function of the quadric")->callback([&] {
    action = [&] { return zeta_of("quadric", quadric_count_poly()); };
  });
  auto* rank1 = zeta_cmd->add_subcommand("rank1", "Zeta function of Z with t short vectors");
  rank1->add_option("--t", o.t, "card(Phi)")->required()->check(CLI::Range(0, 6));
  rank1->callback([&] { action = [&] { return zeta_of("rank1", count_poly(rank1_phi(o.t))); }; });

  auto* oracle = app.add_subcommand("oracle", "Cross-check against enumeration")->require_subcommand(1);
  auto* compare = oracle->add_subcommand("compare", "Compare N(p) with #X(F_p)")->require_subcommand(1);
  auto* compare_fan = compare->add_subcommand("fan", "Toric variety of a fan");
  compare_fan->add_option("file", o.file, "Fan JSON document")->required()->check(CLI::ExistingFile);
  compare_fan->add_option("--primes", o.primes, "Comma-separated primes")->delimiter(',');
  compare_fan->add_option("--inject-offset", o.inject_offset, "Add a constant to N before comparing");
  compare_fan->callback([&] { action = [&] { return oracle_compare(o); }; });

  auto* imj_cmd = app.add_subcommand("imj", "Order of the image of J in degree 2i - 1");
  imj_cmd->add_option("--i", o.i, "Even index i >= 2")->required();
  imj_cmd->add_option("--nmax", o.nmax, "Largest n in the gcd")->check(CLI::Range(3L, 100000L));
  imj_cmd->callback([&] { action = [&] { return imj(o); }; });

  try {
    app.parse(argc, argv);
    return action();
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const f1::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
}
