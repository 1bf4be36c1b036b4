// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mf/bounds.hpp"
#include "mf/errors.hpp"
#include "mf/matroid.hpp"
#include "mf/solver.hpp"
#include "mf/system.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDecided = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Options {
  std::string catalog_name;
  std::string file_path;
  std::uint32_t p = 0;
  int k = 1;
  std::uint32_t q = 0;
  std::uint32_t q_max = 128;
  std::uint32_t p_max = 16;
  int k_cap = 4;
  int degree_cap = 6;
  std::string format = "text";
  int threads = 1;
  std::string formulation = "per-basis";
  int n = 0;
  int max_a = 100;
};

mf::Matroid load_matroid(const Options& opt) {
  if (!opt.catalog_name.empty()) return mf::catalog(opt.catalog_name);
  if (!opt.file_path.empty()) {
    std::ifstream in(opt.file_path);
    if (!in) throw mf::Error("cannot open file: " + opt.file_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return mf::parse_matroid(buf.str());
  }
  throw mf::Error("need --catalog or --file");
}

mf::FieldPtr load_field(const Options& opt) {
  if (opt.q > 0) {
    std::uint32_t p = 0, v = opt.q;
    for (std::uint32_t d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = v;
    int k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) throw mf::Error("--q must be a prime power");
    return mf::FieldSpec::make(p, k);
  }
  if (opt.p == 0) throw mf::Error("need --p [--k] or --q");
  return mf::FieldSpec::make(opt.p, opt.k);
}

mf::Formulation parse_formulation(const std::string& s) {
  if (s == "single" || s == "single-dummy") return mf::Formulation::single_dummy;
  if (s == "per-basis" || s == "per-basis-dummies")
    return mf::Formulation::per_basis_dummies;
  throw mf::Error("unknown formulation: " + s);
}

json point_to_json(const mf::SolutionPoint& pt) {
  json j;
  j["field"] = pt.field->to_string();
  json vals = json::array();
  for (std::uint32_t v : pt.values)
    vals.push_back(pt.field->element_to_string(v));
  j["values"] = vals;
  return j;
}

json rep_to_json(const mf::RepMatrix& rep) {
  json j;
  j["field"] = rep.field->to_string();
  json rows = json::array();
  for (const auto& row : rep.entries) {
    json r = json::array();
    for (std::uint32_t v : row) r.push_back(rep.field->element_to_string(v));
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

void print_rep_text(const mf::RepMatrix& rep) {
  std::cout << "field " << rep.field->to_string() << "\n";
  for (const auto& row : rep.entries) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) std::cout << ' ';
      std::cout << rep.field->element_to_string(row[c]);
    }
    std::cout << "\n";
  }
}

int cmd_validate(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  std::cout << "valid: n=" << m.n << " r=" << m.r
            << " bases=" << m.bases.size() << "\n";
  return kExitDecided;
}

int cmd_show(const Options& opt) {
  std::cout << mf::serialize_matroid(load_matroid(opt));
  return kExitDecided;
}

int cmd_gen_system(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  mf::PolySystem s =
      mf::system_from_matroid(m, parse_formulation(opt.formulation));
  std::cout << mf::system_to_json(s) << "\n";
  return kExitDecided;
}

int cmd_params(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  mf::PolySystem s =
      mf::system_from_matroid(m, parse_formulation(opt.formulation));
  mf::SystemParams p = mf::params(s, m);
  if (opt.format == "json") {
    json j;
    j["s"] = p.s;
    j["t"] = p.t;
    j["d"] = p.d;
    j["D"] = p.D;
    j["H"] = p.H.get_str();
    j["h"] = p.h;
    j["H_exact"] = p.H_exact;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "s=" << p.s << " t=" << p.t << " d=" << p.d << " D=" << p.D
              << " H=" << p.H.get_str() << " h=" << p.h
              << (p.H_exact ? "" : " (H is an upper bound)") << "\n";
  }
  return kExitDecided;
}

int cmd_solve(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  mf::PolySystem s =
      mf::system_from_matroid(m, parse_formulation(opt.formulation));
  if (opt.p == 0) throw mf::Error("solve needs --p");
  for (int k = 1; k <= opt.k_cap; ++k) {
    std::uint64_t q = 1;
    bool fits = true;
    for (int i = 0; i < k; ++i) {
      q *= opt.p;
      if (q > mf::FieldSpec::kMaxOrder) fits = false;
    }
    if (!fits) break;
    auto rep =
        mf::find_representation(m, mf::FieldSpec::make(opt.p, k), opt.threads);
    if (rep) {
      mf::SolutionPoint pt = mf::representation_to_point(m, s, *rep);
      if (opt.format == "json")
        std::cout << point_to_json(pt).dump(2) << "\n";
      else {
        std::cout << "field " << pt.field->to_string() << "\n";
        for (std::uint32_t v : pt.values)
          std::cout << pt.field->element_to_string(v) << "\n";
      }
      return kExitDecided;
    }
  }
  std::cout << "no solution found (p=" << opt.p << ", k_cap=" << opt.k_cap
            << ")\n";
  return kExitInconclusive;
}

int cmd_represent(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  mf::FieldPtr f = load_field(opt);
  auto rep = mf::find_representation(m, f, opt.threads);
  if (!rep) {
    std::cout << "not representable over " << f->to_string() << "\n";
    return kExitDecided;
  }
  if (opt.format == "json")
    std::cout << rep_to_json(*rep).dump(2) << "\n";
  else
    print_rep_text(*rep);
  return kExitDecided;
}

int cmd_compute_f(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  auto f = mf::compute_f(m, opt.q_max, opt.threads);
  if (f) {
    std::cout << "f = " << *f << "\n";
    return kExitDecided;
  }
  std::cout << "unknown (q_max=" << opt.q_max << ")\n";
  return kExitInconclusive;
}

int cmd_compute_c(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  auto c = mf::compute_c(m, opt.p_max, opt.k_cap, opt.threads);
  if (c) {
    std::cout << "c = " << *c << "\n";
    return kExitDecided;
  }
  std::cout << "unknown (caps: p_max=" << opt.p_max << ", k_cap=" << opt.k_cap
            << ")\n";
  return kExitInconclusive;
}

int cmd_cert(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  mf::PolySystem s =
      mf::system_from_matroid(m, parse_formulation(opt.formulation));
  mf::CertificateReport rep;
  if (opt.p > 0)
    rep = mf::nullstellensatz_certificate(s, mf::CertDomain::mod_p, opt.p,
                                          opt.degree_cap);
  else
    rep = mf::nullstellensatz_certificate(s, mf::CertDomain::rationals, 0,
                                          opt.degree_cap);
  if (opt.format == "json") {
    json j;
    j["found"] = rep.found;
    j["search_complete"] = rep.search_complete;
    j["cofactor_degree"] = rep.cofactor_degree;
    j["verified"] = rep.verified;
    if (rep.domain == mf::CertDomain::mod_p) j["p"] = rep.p;
    if (rep.domain == mf::CertDomain::rationals)
      j["integer_witness"] = rep.denominator.get_str();
    if (rep.found) {
      json cof = json::array();
      for (const auto& g : rep.cofactors) cof.push_back(mf::to_string(g));
      j["cofactors"] = cof;
    }
    std::cout << j.dump(2) << "\n";
  } else if (rep.found) {
    std::cout << "certificate found at cofactor degree " << rep.cofactor_degree
              << " (verified)\n";
    if (rep.domain == mf::CertDomain::rationals)
      std::cout << "integer witness a = " << rep.denominator.get_str() << "\n";
    for (size_t i = 0; i < rep.cofactors.size(); ++i)
      if (!rep.cofactors[i].is_zero())
        std::cout << "g" << (i + 1) << " = " << mf::to_string(rep.cofactors[i])
                  << "\n";
  } else {
    std::cout << "no certificate up to degree_cap=" << opt.degree_cap
              << (rep.search_complete ? " (search complete)"
                                      : " (search truncated)")
              << "\n";
  }
  return rep.found ? kExitDecided : kExitInconclusive;
}

int cmd_scan_primes(const Options& opt) {
  mf::Matroid m = load_matroid(opt);
  mf::PolySystem s =
      mf::system_from_matroid(m, parse_formulation(opt.formulation));
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p <= opt.p_max; ++p)
    if (mf::is_prime_u64(p)) primes.push_back(p);
  auto verdicts = mf::witness_prime_scan(s, primes, opt.k_cap, opt.degree_cap,
                                         &m, opt.threads);
  bool any_inconclusive = false;
  for (auto [p, v] : verdicts) {
    const char* name = v == mf::PrimeVerdict::consistent ? "consistent"
                       : v == mf::PrimeVerdict::inconsistent
                           ? "inconsistent"
                           : "inconclusive-at-caps";
    if (v == mf::PrimeVerdict::inconclusive) any_inconclusive = true;
    std::cout << p << ": " << name << "\n";
  }
  return any_inconclusive ? kExitInconclusive : kExitDecided;
}

int cmd_bounds(const Options& opt) {
  mf::HeadlineBounds hb = mf::headline_bounds(opt.n);
  if (opt.format == "csv") {
    std::cout << "name,value\n"
              << "c_bound," << hb.c_bound.to_string() << "\n"
              << "f_bound," << hb.f_bound.to_string() << "\n"
              << "c_pos_bound," << hb.c_pos_bound.to_string() << "\n"
              << "f_pos_bound," << hb.f_pos_bound.to_string() << "\n"
              << "c0_bound," << hb.c0_bound.to_string() << "\n"
              << "f0_bound," << hb.f0_bound.to_string() << "\n"
              << "gfp_threshold," << hb.gfp_threshold.to_string() << "\n";
  } else {
    std::cout << "c bound:        " << hb.c_bound.to_string() << "\n"
              << "f bound:        " << hb.f_bound.to_string() << "\n"
              << "c>0 bound:      " << hb.c_pos_bound.to_string() << "\n"
              << "f>0 bound:      " << hb.f_pos_bound.to_string() << "\n"
              << "c0 bound:       " << hb.c0_bound.to_string() << "\n"
              << "f0 bound:       " << hb.f0_bound.to_string() << "\n"
              << "GF(p) threshold: " << hb.gfp_threshold.to_string() << "\n";
  }
  return kExitDecided;
}

int cmd_lower_bound(const Options& opt) {
  mf::LowerBoundWitness w = mf::lower_bound_witness(opt.n);
  std::cout << "bound = " << w.bound.to_string()
            << ", prime = " << w.prime.get_str() << "\n";
  return kExitDecided;
}

int cmd_primorial_check(const Options& opt) {
  auto rows = mf::primorial_check(opt.max_a);
  std::cout << "a,primorial,threshold,pass\n";
  bool all_pass = true;
  for (const auto& row : rows) {
    std::cout << row.a << ',' << row.primorial.get_str() << ','
              << row.threshold.get_str() << ','
              << (row.pass ? "pass" : "FAIL") << "\n";
    if (!row.pass) all_pass = false;
  }
  return all_pass ? kExitDecided : kExitError;
}

int cmd_table1(const Options& opt) {
  struct Row {
    const char* label;
    const char* quantity;
    std::uint32_t expected;
  };
  const Row rows[] = {
      {"uniform:2:4", "f", 3}, {"uniform:2:5", "f", 4},
      {"uniform:2:6", "f", 5}, {"uniform:2:7", "f", 7},
      {"fano", "f", 2},        {"nonfano", "c", 3},
  };
  std::cout << "matroid      quantity computed reference match\n";
  bool all = true;
  for (const Row& row : rows) {
    mf::Matroid m = mf::catalog(row.label);
    std::uint32_t got = 0;
    if (row.quantity[0] == 'f') {
      auto f = mf::compute_f(m, opt.q_max, opt.threads);
      got = f.value_or(0);
    } else {
      auto c = mf::compute_c(m, opt.p_max, opt.k_cap, opt.threads);
      got = c.value_or(0);
    }
    bool match = got == row.expected;
    all = all && match;
    std::ostringstream name;
    name << row.label;
    std::cout << name.str();
    for (size_t i = name.str().size(); i < 13; ++i) std::cout << ' ';
    std::cout << row.quantity << "        " << got << "        "
              << row.expected << "         " << (match ? "yes" : "NO")
              << "\n";
  }
  std::cout << (all ? "all rows match\n" : "MISMATCH\n");
  return all ? kExitDecided : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid representability toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool matroid_input) {
    if (matroid_input) {
      sub->add_option("--catalog", opt.catalog_name, "catalog matroid name");
      sub->add_option("--file", opt.file_path, "matroid file path");
    }
    sub->add_option("--format", opt.format, "text|json|csv");
    sub->add_option("--threads", opt.threads, "worker count");
    return sub;
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", opt.p, "field characteristic");
    sub->add_option("--k", opt.k, "extension degree");
    sub->add_option("--q", opt.q, "field order (prime power)");
  };
  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--formulation", opt.formulation,
                    "single | per-basis (default per-basis)");
  };

  auto* validate = add_common(app.add_subcommand("validate"), true);
  auto* show = add_common(app.add_subcommand("show"), true);
  auto* gen = add_common(app.add_subcommand("gen-system"), true);
  add_form(gen);
  auto* params_cmd = add_common(app.add_subcommand("params"), true);
  add_form(params_cmd);
  auto* solve = add_common(app.add_subcommand("solve"), true);
  add_form(solve);
  solve->add_option("--p", opt.p, "characteristic");
  solve->add_option("--k-cap", opt.k_cap, "extension degree cap");
  auto* represent = add_common(app.add_subcommand("represent"), true);
  add_field(represent);
  auto* cf = add_common(app.add_subcommand("compute-f"), true);
  cf->add_option("--q-max", opt.q_max, "largest field order tried");
  auto* cc = add_common(app.add_subcommand("compute-c"), true);
  cc->add_option("--p-max", opt.p_max, "largest characteristic tried");
  cc->add_option("--k-cap", opt.k_cap, "extension degree cap");
  auto* cert = add_common(app.add_subcommand("cert"), true);
  add_form(cert);
  cert->add_option("--p", opt.p, "certificate modulus (omit for rationals)");
  cert->add_option("--degree-cap", opt.degree_cap, "cofactor degree cap");
  auto* scan = add_common(app.add_subcommand("scan-primes"), true);
  add_form(scan);
  scan->add_option("--p-max", opt.p_max, "scan primes up to this bound");
  scan->add_option("--k-cap", opt.k_cap, "extension degree cap");
  scan->add_option("--degree-cap", opt.degree_cap, "certificate degree cap");
  auto* bounds_cmd = add_common(app.add_subcommand("bounds"), false);
  bounds_cmd->add_option("--n", opt.n, "element count")->required();
  auto* lower = add_common(app.add_subcommand("lower-bound"), false);
  lower->add_option("--n", opt.n, "element count")->required();
  auto* prim = add_common(app.add_subcommand("primorial-check"), false);
  prim->add_option("--max", opt.max_a, "largest a checked");
  auto* table1 = add_common(app.add_subcommand("table1"), false);
  table1->add_option("--q-max", opt.q_max, "largest field order tried");
  table1->add_option("--p-max", opt.p_max, "largest characteristic tried");
  table1->add_option("--k-cap", opt.k_cap, "extension degree cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (show->parsed()) return cmd_show(opt);
    if (gen->parsed()) return cmd_gen_system(opt);
    if (params_cmd->parsed()) return cmd_params(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (represent->parsed()) return cmd_represent(opt);
    if (cf->parsed()) return cmd_compute_f(opt);
    if (cc->parsed()) return cmd_compute_c(opt);
    if (cert->parsed()) return cmd_cert(opt);
    if (scan->parsed()) return cmd_scan_primes(opt);
    if (bounds_cmd->parsed()) return cmd_bounds(opt);
    if (lower->parsed()) return cmd_lower_bound(opt);
    if (prim->parsed()) return cmd_primorial_check(opt);
    if (table1->parsed()) return cmd_table1(opt);
  } catch (const mf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
