#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddsing/oddsing.h"

namespace {

struct Flags {
  std::string alg = "gl";
  std::string family = "even";
  std::string ranks;
  std::string beta;
  std::string lambda;
  std::string format = "plain";
  bool kac = false;
  int samples = 5;
  std::uint64_t seed = 1;
  std::string max_ranks;
  unsigned threads = 0;
  std::string out;
};

int usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return ODDSING_USAGE;
}

bool parse_pair(const std::string& text, int& a, int& b) {
  std::istringstream in(text);
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',') return false;
  in >> std::ws;
  return in.eof();
}

bool parse_format(const std::string& text, oddsing_format& f) {
  if (text == "plain") f = ODDSING_PLAIN;
  else if (text == "latex") f = ODDSING_LATEX;
  else if (text == "json") f = ODDSING_JSON;
  else return false;
  return true;
}

// Prints the document (to --out when given) and the error, returns the exit code.
int finish(oddsing_status s, oddsing_doc* doc, const Flags& flags) {
  if (doc) {
    if (flags.out.empty()) {
      std::cout << oddsing_doc_text(doc);
    } else {
      std::ofstream file(flags.out, std::ios::binary);
      file << oddsing_doc_text(doc);
      if (!file) {
        oddsing_doc_destroy(doc);
        std::cerr << "error: cannot write " << flags.out << "\n";
        return ODDSING_USAGE;
      }
    }
    oddsing_doc_destroy(doc);
  }
  if (s != ODDSING_OK) std::cerr << "error: " << oddsing_last_error() << "\n";
  return static_cast<int>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd singular vectors of Verma and Kac modules over gl(m|n) and osp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(oddsing_version()));
  Flags f;

  const auto algebra_flags = [&](CLI::App* sub) {
    sub->add_option("--alg", f.alg, "gl or osp")->check(CLI::IsMember({"gl", "osp"}));
    sub->add_option("--family", f.family, "osp family: even or odd")->check(CLI::IsMember({"even", "odd"}));
    sub->add_option("--ranks", f.ranks, "m,n (osp: m epsilons, n deltas)")->required();
    sub->add_option("--format", f.format, "plain, latex or json");
    sub->add_option("--out", f.out, "write the document to FILE");
  };

  CLI::App* singular = app.add_subcommand("singular", "closed-formula singular vector");
  algebra_flags(singular);
  singular->add_option("--beta", f.beta, "odd root, e.g. d2-e1")->required();
  singular->add_option("--lambda", f.lambda, "a_m,...,a_1,b_1,...,b_n; rationals or expressions in a<i>, b<j>")
      ->required();

  CLI::App* shapovalov = app.add_subcommand("shapovalov", "Shapovalov element for an odd root");
  algebra_flags(shapovalov);
  shapovalov->add_option("--beta", f.beta, "odd root, e.g. d2-e1")->required();

  CLI::App* verify = app.add_subcommand("verify", "null-space oracle at a numeric weight");
  algebra_flags(verify);
  verify->add_option("--beta", f.beta, "odd root")->required();
  verify->add_option("--lambda", f.lambda, "numeric weight")->required();
  verify->add_flag("--kac", f.kac, "add the Kac module verdict");

  CLI::App* kac = app.add_subcommand("kac-check", "singular vector in the Kac module");
  algebra_flags(kac);
  kac->add_option("--beta", f.beta, "odd root")->required();
  kac->add_option("--lambda", f.lambda, "integral dominant weight")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "seeded sweep of formula and oracle checks");
  sweep->add_option("--alg", f.alg, "gl or osp")->check(CLI::IsMember({"gl", "osp"}));
  sweep->add_option("--family", f.family, "osp family: even or odd")->check(CLI::IsMember({"even", "odd"}));
  sweep->add_option("--max-ranks", f.max_ranks, "M,N, or 0 for an empty sweep")->required();
  sweep->add_option("--samples", f.samples, "weights per root");
  sweep->add_option("--seed", f.seed, "random seed");
  sweep->add_option("--threads", f.threads, "worker threads, 0 for all cores");
  sweep->add_option("--format", f.format, "plain or json");
  sweep->add_option("--out", f.out, "write the document to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ODDSING_USAGE;
  }

  oddsing_format format;
  if (!parse_format(f.format, format)) return usage("unknown format '" + f.format + "'");
  const oddsing_family family = f.family == "odd" ? ODDSING_ODD : ODDSING_EVEN;
  oddsing_doc* doc = nullptr;

  if (sweep->parsed()) {
    int max_m = 0, max_n = 0;
    if (f.max_ranks == "0") max_m = max_n = 0;
    else if (!parse_pair(f.max_ranks, max_m, max_n)) return usage("--max-ranks expects M,N");
    const oddsing_status s =
        oddsing_sweep(f.alg.c_str(), family, max_m, max_n, f.samples, f.seed, f.threads, format, &doc);
    return finish(s, doc, f);
  }

  int m = 0, n = 0;
  if (!parse_pair(f.ranks, m, n)) return usage("--ranks expects m,n");
  oddsing_algebra* alg = nullptr;
  oddsing_status s = f.alg == "gl" ? oddsing_gl_create(m, n, &alg) : oddsing_osp_create(family, m, n, &alg);
  if (s != ODDSING_OK) return finish(s, nullptr, f);

  if (singular->parsed()) s = oddsing_singular(alg, f.beta.c_str(), f.lambda.c_str(), format, &doc);
  else if (shapovalov->parsed()) s = oddsing_shapovalov(alg, f.beta.c_str(), format, &doc);
  else if (verify->parsed()) s = oddsing_verify(alg, f.beta.c_str(), f.lambda.c_str(), f.kac, format, &doc);
  else s = oddsing_kac_check(alg, f.beta.c_str(), f.lambda.c_str(), format, &doc);
  oddsing_algebra_destroy(alg);
  return finish(s, doc, f);
}
