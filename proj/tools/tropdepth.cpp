// Command-line front end: analyze, tropical and verify subcommands over ideal files.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tropdepth/tropdepth.hpp"

namespace {

using namespace tropdepth;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kNotHomogeneous = 3, kGenericity = 4, kDegreeCap = 5 };

WeightVector parse_omega(const std::string& s) {
  std::vector<Rational> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q;
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos || q.set_str(item.substr(b, e - b + 1), 10) != 0 || q.get_den() == 0) {
      throw ParseError("bad --omega entry: \"" + item + "\"");
    }
    q.canonicalize();
    w.push_back(q);
  }
  if (w.empty()) throw ParseError("--omega is empty");
  return WeightVector(std::move(w));
}

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic tropical varieties, depth and multiplicity of graded ideals"};
  app.require_subcommand(1);

  GenericityPolicy policy;
  VerifyOptions opt;
  int degree_cap = kDefaultDegreeCap;
  std::string json_path;
  std::string file;
  std::string omega_text;
  std::string target;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", file, "ideal file")->required();
    sub->add_option("--seed", policy.seed, "PRNG seed")->capture_default_str();
    sub->add_option("--bound", policy.bound, "transform entries drawn from [-B, B]")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--samples", policy.samples, "independent transforms that must agree")->capture_default_str()
        ->check(CLI::Range(2, 64));
    sub->add_option("--points", opt.points, "interior points per cone")->capture_default_str()
        ->check(CLI::Range(2, 64));
    sub->add_option("--degree-cap", degree_cap, "abort Groebner bases beyond this degree")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_flag("--identity", policy.identity, "use the identity transform (non-generic coordinates)");
    sub->add_option("--json", json_path, "write the report to this path instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "dimension, depth, CM class, multiplicity and gin");
  common(analyze);
  auto* tropical = app.add_subcommand("tropical", "tropical membership of a weight vector");
  common(tropical);
  tropical->add_option("--omega", omega_text, "comma-separated weights, e.g. 0,0,1,1")->required();
  auto* verify = app.add_subcommand("verify", "check a fan or multiplicity statement");
  common(verify);
  verify->add_option("--target", target, "Wnm, Wnmt, multiplicity or depth-recovery")
      ->required()
      ->check(CLI::IsMember({"Wnm", "Wnmt", "multiplicity", "depth-recovery"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    const IdealFile f = read_ideal_file(file);
    if (*analyze) {
      emit(analyze_report(f, policy, opt, degree_cap), json_path);
    } else if (*tropical) {
      emit(tropical_report(f, parse_omega(omega_text), policy, degree_cap), json_path);
    } else {
      const VerifyResult v = verify_report(f, target, policy, opt, degree_cap);
      emit(v.report, json_path);
      if (!v.pass) return kVerifyFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const NotHomogeneous& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotHomogeneous;
  } catch (const GenericityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGenericity;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegreeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
