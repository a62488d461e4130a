// Copyright 2026 The selfdual Authors.
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

#include "selfdual/cli.h"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfdual/ag_code.h"
#include "selfdual/bounds.h"
#include "selfdual/code_io.h"
#include "selfdual/error.h"
#include "selfdual/finite_field.h"
#include "selfdual/function_field.h"
#include "selfdual/linear_code.h"
#include "selfdual/random.h"
#include "selfdual/selfdual.h"

namespace selfdual {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "json";
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t seed = 0;

  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string in;
  std::string contains;
  bool check_self_dual = false;
  bool check_self_orthogonal = false;
  std::string support = "all";
  std::int64_t g_inf = 0;
  bool dual = false;
  double delta = 0.0;
  std::uint64_t l = 0;
  std::uint32_t r = 0;
  std::uint64_t from = 2;
  std::uint64_t to = 2;
  std::int64_t m = 1;
  std::string gamma;
};

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("SELFDUAL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

Json CodeJson(const LinearCode& code) {
  return Json::parse(WriteCodeJson(code));
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

Json OptionalDistance(const LinearCode& code, std::uint64_t budget) {
  if (code.dimension() == 0) return nullptr;
  try {
    return MinDistance(code, {budget, 0});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBudgetExceeded) return nullptr;
    throw;
  }
}

Divisor SupportDivisor(const FiniteField& field, const std::string& support) {
  Divisor d;
  if (support == "all" || support == "nonzero") {
    for (Elt a = support == "all" ? 0 : 1; a < field.q(); ++a) {
      d.Add(Place::Rational(field, a), 1);
    }
    return d;
  }
  std::stringstream in(support);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad support element \"" + item + "\"");
    }
    if (!field.Contains(v)) {
      throw Error(ErrorCode::kFieldMismatch,
                  std::to_string(v) + " is not in F_" +
                      std::to_string(field.q()));
    }
    const Place place = Place::Rational(field, static_cast<Elt>(v));
    if (d.Coeff(place) != 0) {
      throw Error(ErrorCode::kDomainError,
                  "support element " + std::to_string(v) + " repeated");
    }
    d.Add(place, 1);
  }
  if (d.IsZero()) throw Error(ErrorCode::kDomainError, "empty support");
  return d;
}

void FieldInfo(const Options& o, std::ostream& out) {
  const FiniteField f = FiniteField::OfOrder(o.q);
  Json doc;
  doc["p"] = f.p();
  doc["m"] = f.m();
  doc["q"] = f.q();
  doc["modulus"] = f.modulus();
  try {
    doc["sqrt_minus_one"] = SqrtOfMinusOne(f);
  } catch (const Error&) {
    doc["sqrt_minus_one"] = nullptr;
  }
  try {
    auto [a, b] = SolveAlphaBeta(f);
    doc["alpha_beta"] = {a, b};
  } catch (const Error&) {
    doc["alpha_beta"] = nullptr;
  }
  out << doc.dump() << '\n';
}

void SelfDualExists(const Options& o, std::ostream& out) {
  Json doc;
  doc["q"] = o.q;
  doc["n"] = o.n;
  doc["exists"] = ExistsSelfDual(o.q, o.n);
  out << doc.dump() << '\n';
}

void CodeInfo(const Options& o, std::ostream& out) {
  const LinearCode code = ReadCodeFile(o.in);
  Json doc;
  doc["q"] = code.field().q();
  doc["n"] = code.length();
  doc["k"] = code.dimension();
  doc["d"] = OptionalDistance(code, o.budget);
  doc["self_orthogonal"] = IsSelfOrthogonal(code);
  doc["self_dual"] = IsSelfDual(code);
  out << doc.dump() << '\n';
}

// Returns false when a requested check fails.
bool CodeVerify(const Options& o, std::ostream& out) {
  const LinearCode code = ReadCodeFile(o.in);
  Json doc;
  bool ok = true;
  if (o.check_self_orthogonal) {
    const bool v = IsSelfOrthogonal(code);
    doc["self_orthogonal"] = v;
    ok = ok && v;
  }
  if (o.check_self_dual) {
    const bool v = IsSelfDual(code);
    doc["self_dual"] = v;
    ok = ok && v;
  }
  if (!o.contains.empty()) {
    const bool v = code.Contains(ReadCodeFile(o.contains));
    doc["contains"] = v;
    ok = ok && v;
  }
  doc["ok"] = ok;
  out << doc.dump() << '\n';
  return ok;
}

void AgBuild(const Options& o, std::ostream& out) {
  const FiniteField f = FiniteField::OfOrder(o.q);
  AGCodeSpec spec{f, SupportDivisor(f, o.support),
                  Divisor::Of(Place::Infinity(f), o.g_inf), std::nullopt};
  if (o.dual) {
    spec.omega = MakeOmegaFor(spec.d);
    out << WriteCodeJson(AgDual(spec)) << '\n';
  } else {
    out << WriteCodeJson(ClCode(spec)) << '\n';
  }
}

void AgOmega(const Options& o, std::ostream& out) {
  const FiniteField f = FiniteField::OfOrder(o.q);
  const Divisor d = SupportDivisor(f, o.support);
  const Differential omega = MakeOmegaFor(d);
  Json doc;
  doc["omega"] = omega.f.ToString() + " dz";
  doc["divisor"] = DifferentialDivisor(omega).ToString();
  doc["degree"] = DifferentialDivisor(omega).Degree();
  Json residues = Json::array();
  for (const auto& place : d.Support()) residues.push_back(Residue(omega, place));
  doc["residues"] = residues;
  doc["certified"] = IsCertified(d, omega);
  out << doc.dump() << '\n';
}

void AgSelfDual(const Options& o, std::ostream& out) {
  const FiniteField f = FiniteField::OfOrder(o.q);
  const Divisor d = SupportDivisor(f, o.support);
  const SelfDualAgResult res = SelfDualAg(d, MakeOmegaFor(d));
  Json doc;
  doc["G"] = res.g.ToString();
  doc["extended"] = res.extended;
  doc["designed_d"] = res.designed_distance;
  doc["d"] = OptionalDistance(res.code, o.budget);
  doc["code"] = CodeJson(res.code);
  out << doc.dump() << '\n';
}

void BoundsScan(const Options& o, std::ostream& out) {
  std::vector<BoundsReport> rows;
  for (std::uint64_t q = o.from; q <= o.to; ++q) {
    if (PrimePowerDecompose(q)) rows.push_back(BeatsGv(q));
  }
  if (o.format == "csv") {
    out << "q,l,r,delta0,delta1,beats_gv\n";
    for (const auto& rep : rows) {
      out << rep.q << ',';
      if (rep.factorizations.empty()) {
        out << ",," << Fixed(rep.delta0, 12) << ",,";
      } else {
        const Factorization* best = &rep.factorizations.front();
        for (const auto& fac : rep.factorizations) {
          if (fac.delta1 > best->delta1) best = &fac;
        }
        out << best->l << ',' << best->r << ',' << Fixed(rep.delta0, 12) << ','
            << Fixed(boost::rational_cast<double>(best->delta1), 12) << ',';
      }
      out << (rep.beats_gv ? "true" : "false") << '\n';
    }
    return;
  }
  Json doc = Json::array();
  for (const auto& rep : rows) {
    Json row;
    row["q"] = rep.q;
    row["delta0"] = rep.delta0;
    Json facs = Json::array();
    for (const auto& fac : rep.factorizations) {
      facs.push_back({{"l", fac.l}, {"r", fac.r},
                      {"delta1", ToString(fac.delta1)}});
    }
    row["factorizations"] = facs;
    row["beats_gv"] = rep.beats_gv;
    row["borderline"] = rep.borderline;
    doc.push_back(row);
  }
  out << doc.dump() << '\n';
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options o;
  o.seed = DefaultSeed();
  std::function<bool()> action;
  // Wraps a command that always succeeds once it returns.
  auto run = [&](auto fn) {
    return [&, fn]() {
      fn(o, out);
      return true;
    };
  };

  CLI::App app{"Self-dual codes over finite fields", "selfdual"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", o.budget,
                 "Maximum codeword classes for minimum distance");
  app.add_option("--seed", o.seed, "Seed for randomized commands");

  auto group = [&](const char* name, const char* help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1, 1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help,
                  std::function<bool()> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->fallthrough();
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  CLI::App* field = group("field", "Finite field information");
  leaf(field, "info", "Modulus and special elements of F_q",
       run(FieldInfo))
      ->add_option("--q", o.q, "Field order")
      ->required();

  CLI::App* sd = group("selfdual", "Self-dual code constructions");
  {
    CLI::App* c = leaf(sd, "exists", "Whether self-dual codes exist",
                       run(SelfDualExists));
    c->add_option("--q", o.q)->required();
    c->add_option("--n", o.n)->required();
  }
  {
    CLI::App* c = leaf(sd, "base", "Explicit self-dual code", run([](const Options& o, std::ostream& out) {
      out << WriteCodeJson(BaseSelfDual(FiniteField::OfOrder(o.q), o.n))
          << '\n';
    }));
    c->add_option("--q", o.q)->required();
    c->add_option("--n", o.n)->required();
  }
  leaf(sd, "embed", "Extend a self-orthogonal code to a self-dual code",
       run([](const Options& o, std::ostream& out) {
         out << WriteCodeJson(EmbedSelfDual(ReadCodeFile(o.in))) << '\n';
       }))
      ->add_option("--in", o.in)
      ->required();
  {
    CLI::App* c = leaf(sd, "random", "Random self-orthogonal code",
                       run([](const Options& o, std::ostream& out) {
                         Rng rng(o.seed);
                         out << WriteCodeJson(RandomSelfOrthogonal(
                                    FiniteField::OfOrder(o.q), o.n, o.k, rng))
                             << '\n';
                       }));
    c->add_option("--q", o.q)->required();
    c->add_option("--n", o.n)->required();
    c->add_option("--k", o.k)->required();
  }

  CLI::App* code = group("code", "Operations on code files");
  leaf(code, "info", "Parameters and predicates", run(CodeInfo))
      ->add_option("--in", o.in)
      ->required();
  leaf(code, "dual", "Dual code", run([](const Options& o, std::ostream& out) {
         out << WriteCodeJson(Dual(ReadCodeFile(o.in))) << '\n';
       }))
      ->add_option("--in", o.in)
      ->required();
  leaf(code, "mindist", "Exact minimum distance",
       run([](const Options& o, std::ostream& out) {
         Json doc;
         doc["d"] = MinDistance(ReadCodeFile(o.in), {o.budget, 0});
         out << doc.dump() << '\n';
       }))
      ->add_option("--in", o.in)
      ->required();
  {
    CLI::App* c = leaf(code, "verify", "Check predicates",
                       [&] { return CodeVerify(o, out); });
    c->add_option("--in", o.in)->required();
    c->add_flag("--self-dual", o.check_self_dual);
    c->add_flag("--self-orthogonal", o.check_self_orthogonal);
    c->add_option("--contains", o.contains, "Code file that must be a subcode");
  }

  CLI::App* ag = group("ag", "Algebraic-geometry codes on F_q(z)");
  {
    CLI::App* c = leaf(ag, "build", "C_L(k P_inf, D)", run(AgBuild));
    c->add_option("--q", o.q)->required();
    c->add_option("--support", o.support,
                  "all, nonzero, or comma-separated elements");
    c->add_option("--g", o.g_inf, "Coefficient of P_inf in G");
    c->add_flag("--dual", o.dual, "Build the dual via du/u");
  }
  {
    CLI::App* c = leaf(ag, "omega", "du/u for the support", run(AgOmega));
    c->add_option("--q", o.q)->required();
    c->add_option("--support", o.support);
  }
  {
    CLI::App* c = leaf(ag, "selfdual", "Self-dual AG code", run(AgSelfDual));
    c->add_option("--q", o.q)->required();
    c->add_option("--support", o.support);
  }

  CLI::App* bounds = group("bounds", "Asymptotic bounds");
  {
    CLI::App* c = leaf(bounds, "entropy", "q-ary entropy",
                       run([](const Options& o, std::ostream& out) {
                         Json doc;
                         doc["q"] = o.q;
                         doc["delta"] = o.delta;
                         doc["H"] = Entropy(o.q, o.delta);
                         out << doc.dump() << '\n';
                       }));
    c->add_option("--q", o.q)->required();
    c->add_option("--delta", o.delta)->required();
  }
  leaf(bounds, "delta0", "GV relative distance at rate 1/2",
       run([](const Options& o, std::ostream& out) {
         const double d0 = GvDeltaAtHalf(o.q);
         Json doc;
         doc["q"] = o.q;
         doc["delta0"] = d0;
         doc["residual"] = std::abs(Entropy(o.q, d0) - 0.5);
         out << doc.dump() << '\n';
       }))
      ->add_option("--q", o.q)
      ->required();
  {
    CLI::App* c = leaf(bounds, "delta1", "TVZ-type self-dual bound",
                       run([](const Options& o, std::ostream& out) {
                         const Rational d1 = TvzSelfDualDelta(o.l, o.r);
                         Json doc;
                         doc["l"] = o.l;
                         doc["r"] = o.r;
                         doc["delta1"] = ToString(d1);
                         doc["value"] = boost::rational_cast<double>(d1);
                         doc["sufficient"] = SufficiencyCheck(o.l, o.r);
                         out << doc.dump() << '\n';
                       }));
    c->add_option("--l", o.l)->required();
    c->add_option("--r", o.r)->required();
  }
  {
    CLI::App* c = leaf(bounds, "scan", "Compare bounds over a range of q",
                       run(BoundsScan));
    c->add_option("--from", o.from)->required();
    c->add_option("--to", o.to)->required();
  }
  {
    CLI::App* c = leaf(
        bounds, "tower", "1/2 - gamma/m for a tower",
        run([](const Options& o, std::ostream& out) {
          Rational gamma;
          if (!o.gamma.empty()) {
            gamma = ParseRational(o.gamma);
          } else if (o.l != 0) {
            gamma = BbgsGamma(o.l, o.r);
          } else {
            throw Error(ErrorCode::kParseError, "need --gamma or --l/--r");
          }
          Json doc;
          doc["m"] = o.m;
          doc["gamma"] = ToString(gamma);
          doc["bound"] = ToString(TowerRateBound(o.m, gamma));
          out << doc.dump() << '\n';
        }));
    c->add_option("--m", o.m);
    c->add_option("--gamma", o.gamma, "Tower genus as a/b");
    c->add_option("--l", o.l, "Use the odd-r tower genus for q = l^r");
    c->add_option("--r", o.r);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Json doc;
    doc["error"] = "UsageError";
    doc["detail"] = e.what();
    out << doc.dump() << '\n';
    err << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    return action() ? kExitOk : kExitDomainError;
  } catch (const Error& e) {
    Json doc;
    doc["error"] = std::string(ErrorName(e.code()));
    doc["detail"] = e.what();
    out << doc.dump() << '\n';
    return kExitDomainError;
  }
}

}  // namespace selfdual
