#include "bernalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "bernalg/commands.hpp"

namespace bernalg {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

AlgebraFile load(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_algebra(text);
  } catch (const ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in commutative and Bernstein algebras", "bernalg"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t rng_seed = 1;
  std::size_t max_steps = 0;
  app.add_flag("--json", json, "Emit JSON reports");
  app.add_option("--seed-rng", rng_seed, "Seed for randomized probes");
  app.add_option("--max-steps", max_steps, "Bound on power-chain length")->check(CLI::PositiveNumber);

  std::string path;
  std::string seed;
  std::string kind_name;
  std::string vectors;
  std::string gens;
  std::string by;
  std::string out_path;
  std::size_t n = 0;

  auto with_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", path, "Algebra file, or - for stdin")->required();
    return sub;
  };
  CLI::App* check = with_file("check", "Identities and structure flags");
  CLI::App* peirce = with_file("peirce", "Peirce decomposition relative to an idempotent");
  peirce->add_option("--seed", seed, "Weight-1 element whose square is the idempotent");
  CLI::App* classify = with_file("classify", "Full structural report");
  CLI::App* powers = with_file("powers", "Power chain of N (or of A when not baric)");
  powers->add_option("--kind", kind_name, "full, principal or plenary")
      ->required()
      ->check(CLI::IsMember({"full", "principal", "plenary"}));
  CLI::App* fixedspace = with_file("fixedspace", "Greatest subspace I with VI = I");
  CLI::App* multalg = with_file("multalg", "Nilpotency of the algebra generated by L_v on N");
  CLI::App* lemma51 = with_file("lemma51", "NI = I versus VI = I for a subspace I");
  lemma51->add_option("--subspace", vectors, "Spanning vectors separated by ;")->required();
  CLI::App* thm43 = with_file("thm43", "Decomposition certificate N = F + N^m");
  thm43->add_option("--gens", gens, "Ideal generators separated by ,")->required();
  CLI::App* quotient = with_file("quotient", "Quotient by a baric ideal, as an algebra file");
  quotient->add_option("--by", by, "annU or spanning vectors separated by ;")->required();

  CLI::App* family = app.add_subcommand("family", "Generate a family member as an algebra file");
  family->fallthrough();
  family->add_option("kind", kind_name, "zhevlakov, squareshift, bdown, bup or jordan3")
      ->required()
      ->check(CLI::IsMember({"zhevlakov", "squareshift", "bdown", "bup", "jordan3"}));
  family->add_option("--n", n, "Size parameter")->check(CLI::PositiveNumber);
  family->add_option("--out", out_path, "Write to this file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Options opt;
  opt.rng_seed = rng_seed;
  if (max_steps > 0) opt.max_steps = max_steps;

  try {
    Outcome o;
    if (family->parsed()) {
      o = run_family(*parse_family_kind(kind_name), n > 0 ? std::optional<std::size_t>(n) : std::nullopt);
    } else {
      const AlgebraFile f = load(path, in);
      if (check->parsed()) o = run_check(f, opt);
      else if (peirce->parsed()) o = run_peirce(f, seed.empty() ? std::nullopt : std::optional<std::string>(seed), opt);
      else if (classify->parsed()) o = run_classify(f, opt);
      else if (powers->parsed()) o = run_powers(f, *parse_power_kind(kind_name), opt);
      else if (fixedspace->parsed()) o = run_fixedspace(f, opt);
      else if (multalg->parsed()) o = run_multalg(f, opt);
      else if (lemma51->parsed()) o = run_lemma51(f, vectors, opt);
      else if (thm43->parsed()) o = run_thm43(f, gens, opt);
      else if (quotient->parsed()) o = run_quotient(f, by, opt);
    }

    if (o.dsl) {
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw InputError("cannot write '" + out_path + "'");
        file << *o.dsl;
      } else {
        out << *o.dsl;
      }
    } else if (json) {
      out << o.report.dump(2) << "\n";
    } else {
      out << render_text(o.report);
    }
    return o.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bernalg
