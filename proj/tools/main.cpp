// combinadics — command-line front end for the combinatorial number system.
//
// stdout carries data, stderr carries diagnostics. Exit codes: 0 success,
// 1 domain error (reported as `ERROR <kind>: <detail>`), 2 usage error.
// Subcommands that take one positional input read newline-separated inputs
// from stdin when the positional is omitted.

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "combinadics/combinadic.hpp"
#include "combinadics/combination.hpp"
#include "combinadics/errors.hpp"
#include "combinadics/natural.hpp"
#include "combinadics/verify.hpp"

namespace {

using combinadics::Combinadic;
using combinadics::Combination;
using combinadics::Natural;

void for_each_input(bool arg_given, const std::string& arg,
                    const std::function<void(const std::string&)>& handle) {
  if (arg_given) {
    handle(arg);
    return;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    handle(line);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-r combinatorial number system: exact encode/decode, "
               "successor stepping, combination ranking, and brute-force verification"};
  app.require_subcommand(1);
  int exit_code = 0;

  // encode <m> --terms <r>
  auto* encode_cmd = app.add_subcommand(
      "encode", "Write a value as a descending combinadic tuple");
  std::string encode_value;
  std::size_t encode_terms = 0;
  encode_cmd->add_option("m", encode_value, "value to encode (decimal; stdin if omitted)");
  encode_cmd->add_option("--terms", encode_terms, "number of binomial terms r (r >= 1)")
      ->required();
  encode_cmd->callback([&] {
    for_each_input(encode_cmd->count("m") > 0, encode_value, [&](const std::string& in) {
      std::cout << combinadics::encode(Natural::parse(in), encode_terms).str() << '\n';
    });
  });

  // decode <C_r,...,C_1>
  auto* decode_cmd = app.add_subcommand(
      "decode", "Evaluate a descending combinadic tuple back to its value");
  std::string decode_rep;
  decode_cmd->add_option("tuple", decode_rep,
                         "coefficients C_r,...,C_1 (descending; stdin if omitted)");
  decode_cmd->callback([&] {
    for_each_input(decode_cmd->count("tuple") > 0, decode_rep, [&](const std::string& in) {
      std::cout << combinadics::decode(Combinadic::parse(in)).str() << '\n';
    });
  });

  // succ <tuple> / pred <tuple>
  auto* succ_cmd = app.add_subcommand("succ", "Representation of the next value");
  std::string succ_rep;
  succ_cmd->add_option("tuple", succ_rep, "coefficients C_r,...,C_1 (stdin if omitted)");
  succ_cmd->callback([&] {
    for_each_input(succ_cmd->count("tuple") > 0, succ_rep, [&](const std::string& in) {
      std::cout << combinadics::successor(Combinadic::parse(in)).str() << '\n';
    });
  });

  auto* pred_cmd = app.add_subcommand("pred", "Representation of the previous value");
  std::string pred_rep;
  pred_cmd->add_option("tuple", pred_rep, "coefficients C_r,...,C_1 (stdin if omitted)");
  pred_cmd->callback([&] {
    for_each_input(pred_cmd->count("tuple") > 0, pred_rep, [&](const std::string& in) {
      std::cout << combinadics::predecessor(Combinadic::parse(in)).str() << '\n';
    });
  });

  // rank <c_1,...,c_r>
  auto* rank_cmd = app.add_subcommand(
      "rank", "Colexicographic rank of an ascending combination");
  std::string rank_comb;
  rank_cmd->add_option("combination", rank_comb,
                       "elements c_1,...,c_r (ascending; stdin if omitted)");
  rank_cmd->callback([&] {
    for_each_input(rank_cmd->count("combination") > 0, rank_comb, [&](const std::string& in) {
      std::cout << combinadics::rank(Combination::parse(in)).str() << '\n';
    });
  });

  // unrank <x> -k <r>
  auto* unrank_cmd = app.add_subcommand(
      "unrank", "Combination at a given colexicographic rank");
  std::string unrank_value;
  std::size_t unrank_k = 0;
  unrank_cmd->add_option("x", unrank_value, "rank to invert (decimal; stdin if omitted)");
  unrank_cmd->add_option("-k", unrank_k, "combination size (k >= 1)")->required();
  unrank_cmd->callback([&] {
    for_each_input(unrank_cmd->count("x") > 0, unrank_value, [&](const std::string& in) {
      std::cout << combinadics::unrank(Natural::parse(in), unrank_k).str() << '\n';
    });
  });

  // enumerate -k <r> [--start <x>] [--count <n>]
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "Stream combinations in colexicographic order, one per line");
  std::size_t enum_k = 0;
  std::string enum_start = "0";
  unsigned long long enum_count = 10;
  enum_cmd->add_option("-k", enum_k, "combination size (k >= 1)")->required();
  enum_cmd->add_option("--start", enum_start, "first rank (default 0)");
  enum_cmd->add_option("--count", enum_count, "how many combinations (default 10)");
  enum_cmd->callback([&] {
    combinadics::ColexStream stream(enum_k, Natural::parse(enum_start));
    for (unsigned long long i = 0; i < enum_count; ++i) {
      std::cout << stream.next().str() << '\n';
    }
  });

  // bits <c_1,...,c_r> -n <n>
  auto* bits_cmd = app.add_subcommand(
      "bits", "Render a combination as an n-bit string, highest element first");
  std::string bits_comb;
  std::size_t bits_n = 0;
  bits_cmd->add_option("combination", bits_comb,
                       "elements c_1,...,c_r (ascending; stdin if omitted)");
  bits_cmd->add_option("-n", bits_n, "universe size / bitstring length")->required();
  bits_cmd->callback([&] {
    for_each_input(bits_cmd->count("combination") > 0, bits_comb, [&](const std::string& in) {
      std::cout << combinadics::to_bitstring(Combination::parse(in), bits_n) << '\n';
    });
  });

  // unbits <bitstring>
  auto* unbits_cmd = app.add_subcommand(
      "unbits", "Recover the combination from a '0'/'1' string");
  std::string unbits_str;
  unbits_cmd->add_option("bitstring", unbits_str, "bitstring (stdin if omitted)");
  unbits_cmd->callback([&] {
    for_each_input(unbits_cmd->count("bitstring") > 0, unbits_str, [&](const std::string& in) {
      std::cout << combinadics::from_bitstring(in).str() << '\n';
    });
  });

  // split -k <r> --start <a> --end <b> --parts <p>
  auto* split_cmd = app.add_subcommand(
      "split", "Partition a rank range into near-equal contiguous intervals");
  std::size_t split_k = 0;
  std::string split_start, split_end;
  std::size_t split_parts = 0;
  split_cmd->add_option("-k", split_k, "combination size (k >= 1)")->required();
  split_cmd->add_option("--start", split_start, "first rank (inclusive)")->required();
  split_cmd->add_option("--end", split_end, "last rank (exclusive)")->required();
  split_cmd->add_option("--parts", split_parts, "number of intervals")->required();
  split_cmd->callback([&] {
    auto intervals = combinadics::split_range(split_k, Natural::parse(split_start),
                                              Natural::parse(split_end), split_parts);
    for (const auto& [first, last] : intervals) {
      std::cout << first.str() << ' ' << last.str() << '\n';
    }
  });

  // verify --terms <r> --bound <b>
  auto* verify_cmd = app.add_subcommand(
      "verify", "Exhaustive existence/uniqueness sweep below a coefficient bound "
                "(exits 1 if the sweep finds a violation)");
  std::size_t verify_terms = 0;
  std::string verify_bound;
  verify_cmd->add_option("--terms", verify_terms, "number of binomial terms r")->required();
  verify_cmd->add_option("--bound", verify_bound, "exclusive bound on the top coefficient")
      ->required();
  verify_cmd->callback([&] {
    auto report = combinadics::sweep_uniqueness(verify_terms, Natural::parse(verify_bound));
    std::cout << report.serialize();
    if (!report.pass()) exit_code = 1;
  });

  // identities --nmax <n> --rmax <r>
  auto* ident_cmd = app.add_subcommand(
      "identities", "Exhaustive Pascal / Hockey-Stick / gap identity checks "
                    "(exits 1 on any failed identity)");
  std::size_t ident_nmax = 0;
  std::size_t ident_rmax = 0;
  ident_cmd->add_option("--nmax", ident_nmax, "largest n to check")->required();
  ident_cmd->add_option("--rmax", ident_rmax, "largest r to check")->required();
  ident_cmd->callback([&] {
    auto report = combinadics::sweep_identities(ident_nmax, ident_rmax);
    std::cout << report.serialize();
    if (!report.pass()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage problem
    return code == 0 ? 0 : 2;
  } catch (const combinadics::Error& e) {
    if (e.kind() == combinadics::ErrorKind::MalformedNumber) {
      std::cerr << "error: " << e.detail() << '\n';
      return 2;
    }
    std::cerr << "ERROR " << combinadics::to_string(e.kind()) << ": " << e.detail() << '\n';
    return 1;
  }
  return exit_code;
}
