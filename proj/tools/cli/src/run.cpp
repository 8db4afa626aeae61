#include "brauer/cli/run.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <set>

#include "brauer/arith/number_theory.hpp"
#include "brauer/cli/parse.hpp"
#include "brauer/elliptic/bound.hpp"
#include "brauer/ff/genus.hpp"
#include "brauer/local/hilbert.hpp"
#include "brauer/local/oracle.hpp"

namespace brauer::cli {

namespace {

using local::PlaceQ;

constexpr const char* kHilbertNote = "local Hilbert symbol, closed form";
constexpr const char* kReciprocityNote = "Hilbert reciprocity";
constexpr const char* kEmbeddingNote = "local-global embedding criterion";
constexpr const char* kClassificationNote = "quaternion algebras over Q are classified by ramification";
constexpr const char* kUnramifiedNote = "even subsets of S, by Hilbert reciprocity";
constexpr const char* kResidueNote = "tame symbol residue map";
constexpr const char* kFfBoundNote = "function-field genus bound |nBr(K)_V| * phi(n)^r";
constexpr const char* kEllipticNote = "elliptic genus bound 2^(|S|-t) * |2Cl_S|^2 * |U_S/U_S^2|^2";
constexpr const char* kOracleNote = "brute-force p-adic search of z^2 = a x^2 + b y^2";
constexpr std::uint64_t kBruteFieldLimit = 5000;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_str(const std::vector<PlaceQ>& places) {
  std::string out = "{";
  for (std::size_t i = 0; i < places.size(); ++i) out += (i ? ", " : "") + places[i].str();
  return out + "}";
}

Json places_json(const std::vector<PlaceQ>& places) {
  Json out = Json::array();
  for (const auto& v : places) out.push_back(v.str());
  return out;
}

std::string line(const std::string& text, const std::string& note) { return text + "  [" + note + "]"; }

quat::QuaternionQ require_quaternion(const Algebra& a, const std::string& command) {
  if (const auto* q = std::get_if<quat::QuaternionQ>(&a)) return *q;
  throw DomainError(command + " takes a quaternion algebra (a, b) over Q; symbols over function fields go to ff-ramify or genus-bound");
}

quat::QuadraticField parse_field(const std::string& text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::size_t offset = 0;
  for (std::string_view prefix : {"Q(sqrt(", "sqrt("}) {
    if (s.starts_with(prefix)) {
      const std::size_t close = prefix.size() == 5 ? 1 : 2;
      if (s.size() < prefix.size() + close || s.substr(s.size() - close) != std::string(close, ')'))
        throw ParseError(s.size(), "unbalanced parentheses in field");
      offset = prefix.size();
      s = s.substr(prefix.size(), s.size() - prefix.size() - close);
      break;
    }
  }
  try {
    return quat::QuadraticField(parse_rational(s));
  } catch (const ParseError& e) {
    throw ParseError(e.column() + offset, "field must be d, sqrt(d) or Q(sqrt(d)) with rational d");
  }
}

struct OracleRow {
  PlaceQ place;
  int closed = 1;
  std::optional<int> brute;
  std::string note;
};

std::vector<OracleRow> oracle_rows(const quat::QuaternionQ& D, const std::vector<PlaceQ>& places) {
  std::vector<OracleRow> rows;
  for (const auto& v : places) {
    OracleRow row{v, local::hilbert(D.a(), D.b(), v), std::nullopt, ""};
    try {
      row.brute = v.is_infinite() ? local::hilbert_oracle_real(D.a(), D.b())
                                  : local::hilbert_oracle(D.a(), D.b(), v.prime(), {.allow_two = true});
    } catch (const Error& e) {
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Fills result["oracle"]; true when every checked place agrees.
bool attach_oracle(Report& rep, const std::vector<OracleRow>& rows) {
  Json arr = Json::array();
  int mismatches = 0, skipped = 0;
  for (const auto& r : rows) {
    Json row = {{"place", r.place.str()}, {"closed_form", r.closed}};
    if (r.brute) {
      row["brute_force"] = *r.brute;
      row["status"] = *r.brute == r.closed ? "agree" : "mismatch";
      if (*r.brute != r.closed) {
        ++mismatches;
        rep.summary.push_back(line("oracle mismatch at " + r.place.str() + ": closed form " +
                                       std::to_string(r.closed) + ", search " + std::to_string(*r.brute),
                                   kOracleNote));
      }
    } else {
      row["brute_force"] = nullptr;
      row["status"] = "skipped";
      row["reason"] = r.note;
      ++skipped;
    }
    arr.push_back(std::move(row));
  }
  rep.result["oracle"] = std::move(arr);
  rep.result["oracle_mismatches"] = mismatches;
  rep.summary.push_back(line("oracle: " + std::to_string(rows.size() - skipped - mismatches) + " agree, " +
                                 std::to_string(mismatches) + " mismatch, " + std::to_string(skipped) + " skipped",
                             kOracleNote));
  rep.provenance.push_back(std::string("oracle: ") + kOracleNote + ", digit by digit with Hensel lifting");
  return mismatches == 0;
}

std::vector<PlaceQ> with_extra(std::vector<PlaceQ> places, const std::string& extra) {
  for (const auto& v : parse_places(extra)) places.push_back(v);
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  return places;
}

void do_ramify(const Request& req, Report& rep) {
  const auto D = require_quaternion(parse_algebra(req.arguments[0]), "ramify");
  rep.inputs["algebra"] = req.arguments[0];
  const auto R = quat::ramification_set(D);
  const auto candidates = quat::candidate_places(D);
  Json invariants = Json::array();
  for (const auto& v : candidates)
    invariants.push_back({{"place", v.str()},
                          {"hilbert", local::hilbert(D.a(), D.b(), v)},
                          {"invariant", local::invariant(D.a(), D.b(), v).str()}});
  rep.result["algebra"] = D.str();
  rep.result["ramified_places"] = places_json(R.places());
  rep.result["division"] = !R.empty();
  rep.result["local_invariants"] = std::move(invariants);
  rep.summary.push_back(line("ramified places: " + R.str(), kHilbertNote));
  rep.summary.push_back(line("|ramified places| = " + std::to_string(R.size()) + " (even)", kReciprocityNote));
  rep.summary.push_back(line("division algebra: " + yes_no(!R.empty()), "split iff no place ramifies"));
  rep.provenance = {std::string("ramified places: ") + kHilbertNote +
                        " at the real place and every prime dividing 2ab",
                    std::string("parity: ") + kReciprocityNote};
  if (req.oracle && !attach_oracle(rep, oracle_rows(D, candidates)))
    rep.exit_status = static_cast<int>(ExitCode::OracleMismatch);
}

void do_embed(const Request& req, Report& rep) {
  rep.inputs["field"] = req.arguments[0];
  rep.inputs["algebra"] = req.arguments[1];
  const auto L = parse_field(req.arguments[0]);
  const auto D = require_quaternion(parse_algebra(req.arguments[1]), "embed");
  const bool e = quat::embeds(L, D);
  rep.result["field"] = L.str();
  rep.result["d"] = L.d().get_str();
  rep.result["algebra"] = D.str();
  rep.result["ramified_places"] = places_json(quat::ramification_set(D).places());
  rep.result["embeds"] = e;
  rep.summary.push_back(line(L.str() + " embeds in " + D.str() + ": " + yes_no(e), kEmbeddingNote));
  rep.provenance = {std::string("embeds: ") + kEmbeddingNote +
                    ", d must be a local non-square at every ramified place"};
}

void do_distinguish(const Request& req, Report& rep) {
  rep.inputs["algebra1"] = req.arguments[0];
  rep.inputs["algebra2"] = req.arguments[1];
  const auto D1 = require_quaternion(parse_algebra(req.arguments[0]), "distinguish");
  const auto D2 = require_quaternion(parse_algebra(req.arguments[1]), "distinguish");
  const Integer bound = req.max_witness.value_or(quat::default_witness_bound());
  rep.inputs["max_witness"] = bound.get_str();
  const auto R1 = quat::ramification_set(D1), R2 = quat::ramification_set(D2);
  rep.result["ramified_places1"] = places_json(R1.places());
  rep.result["ramified_places2"] = places_json(R2.places());
  const auto outcome = quat::distinguishing_field(D1, D2, bound);
  if (std::holds_alternative<quat::NoneEquivalent>(outcome)) {
    rep.result["equivalent"] = true;
    rep.summary.push_back(line("no witness: both algebras ramify at " + R1.str(), kClassificationNote));
    rep.provenance = {std::string("equivalence: ") + kClassificationNote};
    return;
  }
  const auto& w = std::get<quat::DistinguishingWitness>(outcome);
  const bool in1 = quat::embeds(w.field, D1), in2 = quat::embeds(w.field, D2);
  if (in1 != w.embeds_in_first || in2 != w.embeds_in_second || in1 == in2)
    throw Error("distinguishing witness failed its re-check");
  rep.result["equivalent"] = false;
  rep.result["witness"] = {{"d", w.field.d().get_str()},
                           {"field", w.field.str()},
                           {"pivot", w.pivot.str()},
                           {"embeds_in_first", in1},
                           {"embeds_in_second", in2}};
  rep.summary.push_back(line("witness: " + w.field.str() + " (pivot place " + w.pivot.str() + ")",
                             "smallest |d| splitting exactly one ramification set"));
  rep.summary.push_back(line("embeds in D1 " + D1.str() + ": " + yes_no(in1), kEmbeddingNote));
  rep.summary.push_back(line("embeds in D2 " + D2.str() + ": " + yes_no(in2), kEmbeddingNote));
  rep.provenance = {std::string("witness: ") + kEmbeddingNote + ", re-checked on both algebras",
                    std::string("ramified places: ") + kHilbertNote};
}

void do_unramified(const Request& req, Report& rep) {
  rep.inputs["places"] = req.arguments[0];
  auto S = parse_places(req.arguments[0]);
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  const auto classes = quat::enumerate_unramified(S);
  Json arr = Json::array();
  for (const auto& R : classes) arr.push_back(places_json(R.places()));
  const Integer order(static_cast<unsigned long>(classes.size()));
  rep.result["S"] = places_json(S);
  rep.result["order"] = order.get_str();
  rep.result["classes"] = std::move(arr);
  rep.summary.push_back(line("|2Br(Q) unramified outside " + set_str(S) + "| = " + order.get_str() + " = 2^" +
                                 std::to_string(S.size() - 1),
                             kUnramifiedNote));
  rep.provenance = {std::string("order: ") + kUnramifiedNote};
}

std::string order_str(std::uint64_t n) { return std::to_string(n); }

/// y^n == t for some y in F_p[x]/(m), by enumeration; empty when the field is too large.
std::optional<bool> brute_nth_power(const arith::PolyFp& t, const arith::PolyFp& m, unsigned n) {
  const std::uint64_t p = m.characteristic();
  std::uint64_t q = 1;
  for (int i = 0; i < m.degree(); ++i) {
    q *= p;
    if (q > kBruteFieldLimit) return std::nullopt;
  }
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    std::vector<std::int64_t> digits;
    for (std::uint64_t r = idx; r; r /= p) digits.push_back(static_cast<std::int64_t>(r % p));
    const arith::PolyFp y(m.modulus(), digits);
    if (arith::pow_mod(y, Integer(n), m) == t % m) return true;
  }
  return false;
}

void do_ff_ramify_fp(const Request& req, Report& rep, const ff::SymbolAlgebraFp& D) {
  Json arr = Json::array();
  std::vector<std::string> ramified;
  int mismatches = 0, skipped = 0;
  for (const auto& r : ff::residues(D)) {
    Json row = {{"place", r.place.str()},
                {"degree", r.place.degree()},
                {"tame_symbol", r.symbol.str()},
                {"character_order", order_str(r.character_order)},
                {"ramified", !r.unramified()}};
    if (!r.unramified()) ramified.push_back(r.place.str());
    if (req.oracle) {
      const auto m = ff::residue_modulus(r.place, D.a().num());
      const auto brute = brute_nth_power(r.symbol, m, D.degree());
      if (!brute) {
        row["oracle"] = "skipped";
        ++skipped;
      } else if (*brute == r.unramified()) {
        row["oracle"] = "agree";
      } else {
        row["oracle"] = "mismatch";
        ++mismatches;
      }
    }
    arr.push_back(std::move(row));
  }
  rep.result["field"] = "F" + std::to_string(D.characteristic()) + "(x)";
  rep.result["residues"] = std::move(arr);
  rep.result["ramified_places"] = ramified;
  std::string set = "{";
  for (std::size_t i = 0; i < ramified.size(); ++i) set += (i ? ", " : "") + ramified[i];
  rep.summary.push_back(line("Ram_V = " + set + "}", kResidueNote));
  rep.provenance = {std::string("residues: ") + kResidueNote +
                    ", class of (-1)^(v(a)v(b)) a^v(b) b^-v(a) modulo n-th powers of the residue field"};
  if (req.oracle) {
    rep.result["oracle_mismatches"] = mismatches;
    rep.summary.push_back(line("oracle: " + std::to_string(mismatches) + " mismatch, " + std::to_string(skipped) +
                                   " skipped",
                               "enumeration of n-th powers in each residue field"));
    rep.provenance.push_back("oracle: enumeration of n-th powers in residue fields of size <= " +
                             std::to_string(kBruteFieldLimit));
    if (mismatches) rep.exit_status = static_cast<int>(ExitCode::OracleMismatch);
  }
}

void do_ff_ramify_q(Report& rep, const ff::SymbolAlgebraQ& D) {
  Json arr = Json::array();
  int unresolved = 0;
  for (const auto& v : ff::ram_V_over_Q(D)) {
    Json row = {{"place", v.place.str()},
                {"degree", v.place.degree()},
                {"tame_symbol", v.symbol.str()},
                {"ramified", v.ramified},
                {"certainty", ff::to_string(v.certainty)}};
    row["witness_prime"] = v.witness_prime ? Json(std::to_string(*v.witness_prime)) : Json(nullptr);
    if (v.certainty == ff::Certainty::UnresolvedSquare) ++unresolved;
    rep.summary.push_back(line(v.place.str() + ": " + (v.ramified ? "ramified" : "undecided") + " (" +
                                   ff::to_string(v.certainty) + ")",
                               kResidueNote));
    arr.push_back(std::move(row));
  }
  rep.result["field"] = "Q(x)";
  rep.result["places"] = std::move(arr);
  rep.result["unresolved"] = unresolved;
  if (rep.summary.empty()) rep.summary.push_back(line("Ram_V = {}", kResidueNote));
  rep.provenance = {std::string("residues: ") + kResidueNote,
                    "squares decided exactly on places of degree <= 2 and for constant residues at odd degree; otherwise non-squares proven at a prime of good reduction"};
  if (unresolved) rep.exit_status = static_cast<int>(ExitCode::UnresolvedSquare);
}

void do_ff_ramify(const Request& req, Report& rep) {
  rep.inputs["symbol"] = req.arguments[0];
  const auto A = parse_algebra(req.arguments[0]);
  if (const auto* d = std::get_if<ff::SymbolAlgebraFp>(&A)) {
    rep.result["symbol"] = d->str();
    do_ff_ramify_fp(req, rep, *d);
  } else if (const auto* d = std::get_if<ff::SymbolAlgebraQ>(&A)) {
    rep.result["symbol"] = d->str();
    do_ff_ramify_q(rep, *d);
  } else {
    throw DomainError("ff-ramify takes a symbol (f, g; n=N, k=FP|Q); use ramify for algebras over Q");
  }
}

std::vector<ReportFactor> factors_of(const GenusBoundReport& r) {
  std::vector<ReportFactor> out;
  for (const auto& f : r.factors) out.push_back({f.name, f.value.get_str(), f.provenance});
  return out;
}

void do_genus_bound(const Request& req, Report& rep) {
  rep.inputs["symbol"] = req.arguments[0];
  if (req.unramified_order) rep.inputs["unramified_order"] = req.unramified_order->get_str();
  const auto A = parse_algebra(req.arguments[0]);
  ff::FunctionFieldGenusBound b;
  if (const auto* d = std::get_if<ff::SymbolAlgebraFp>(&A)) {
    rep.result["symbol"] = d->str();
    b = ff::genus_bound(*d, req.unramified_order);
  } else if (const auto* d = std::get_if<ff::SymbolAlgebraQ>(&A)) {
    rep.result["symbol"] = d->str();
    b = ff::genus_bound(*d, req.unramified_order);
  } else {
    throw DomainError("genus-bound takes a symbol (f, g; n=N, k=FP|Q); use elliptic-bound for curves");
  }
  rep.result["degree"] = b.degree;
  rep.result["ramified_places"] = b.ramified_places;
  rep.result["unresolved_places"] = b.unresolved_places;
  rep.result["bound"] = b.report.bound.get_str();
  rep.factors = factors_of(b.report);
  rep.summary.push_back(line("r = |Ram_V| = " + std::to_string(b.ramified_places), kResidueNote));
  rep.summary.push_back(line("genus bound = " + b.report.bound.get_str(), kFfBoundNote));
  rep.provenance = {std::string("bound: ") + kFfBoundNote, std::string("r: ") + kResidueNote};
  if (b.unresolved_places) {
    rep.summary.push_back(line(std::to_string(b.unresolved_places) + " place(s) with unresolved residue",
                               "no prime of good reduction produced a non-square"));
    rep.exit_status = static_cast<int>(ExitCode::UnresolvedSquare);
  }
}

void do_elliptic(const Request& req, Report& rep) {
  rep.inputs["curve"] = req.arguments[0];
  if (!req.extra_places.empty()) rep.inputs["extra_places"] = req.extra_places;
  const auto E = parse_curve(req.arguments[0]);
  const auto b = elliptic::elliptic_genus_bound(E, parse_places(req.extra_places));
  Json S = Json::array();
  for (const auto& [v, tags] : b.exceptional.entries()) {
    Json t = Json::array();
    for (auto tag : tags) t.push_back(elliptic::to_string(tag));
    S.push_back({{"place", v.str()}, {"tags", std::move(t)}});
  }
  Json roots = Json::array();
  for (const auto& r : E.roots()) roots.push_back(r.str());
  rep.result["curve"] = E.str();
  rep.result["alpha"] = E.alpha().str();
  rep.result["beta"] = E.beta().str();
  rep.result["gamma"] = E.gamma().str();
  rep.result["roots"] = std::move(roots);
  rep.result["discriminant"] = E.discriminant().str();
  rep.result["S"] = std::move(S);
  rep.result["t"] = b.t;
  rep.result["c"] = b.complex_places;
  rep.result["bound"] = b.report.bound.get_str();
  rep.factors = factors_of(b.report);
  const Integer units = elliptic::s_unit_square_classes(b.exceptional);
  rep.summary.push_back(line("discriminant = " + E.discriminant().str(), "cubic discriminant"));
  rep.summary.push_back(line("S = " + b.exceptional.str(), "real place, primes over 2 and over the discriminant"));
  rep.summary.push_back(line("|U_S/U_S^2| = " + units.get_str(), "U_S(Q) = {+-1} x Z^#finite(S)"));
  rep.summary.push_back(line("genus bound = " + b.report.factor("two_power").value.get_str() + " * 1^2 * " +
                                 units.get_str() + "^2 = " + b.report.bound.get_str(),
                             kEllipticNote));
  rep.provenance = {std::string("bound: ") + kEllipticNote + " with t = c + 1 = 1 over Q",
                    "S: smallest set with the real place, V(2), V(discriminant) and poles of the coefficients"};
}

void do_oracle_check(const Request& req, Report& rep) {
  rep.inputs["algebra"] = req.arguments[0];
  if (!req.extra_places.empty()) rep.inputs["extra_places"] = req.extra_places;
  const auto D = require_quaternion(parse_algebra(req.arguments[0]), "oracle-check");
  rep.result["algebra"] = D.str();
  if (!attach_oracle(rep, oracle_rows(D, with_extra(quat::candidate_places(D), req.extra_places))))
    rep.exit_status = static_cast<int>(ExitCode::OracleMismatch);
  rep.provenance.insert(rep.provenance.begin(), std::string("closed form: ") + kHilbertNote);
}

void dispatch(const Request& req, Report& rep) {
  switch (req.command) {
    case Command::Ramify: return do_ramify(req, rep);
    case Command::Embed: return do_embed(req, rep);
    case Command::Distinguish: return do_distinguish(req, rep);
    case Command::UnramifiedGroup: return do_unramified(req, rep);
    case Command::FfRamify: return do_ff_ramify(req, rep);
    case Command::GenusBound: return do_genus_bound(req, rep);
    case Command::EllipticBound: return do_elliptic(req, rep);
    case Command::OracleCheck: return do_oracle_check(req, rep);
  }
}

std::string kind_of(const Error& e) {
  if (dynamic_cast<const SplitAlgebraError*>(&e)) return "split-algebra";
  if (dynamic_cast<const ZeroValuationError*>(&e)) return "zero-valuation";
  if (dynamic_cast<const PrimalityLimitError*>(&e)) return "primality-limit";
  if (dynamic_cast<const UnsupportedError*>(&e)) return "unsupported";
  if (dynamic_cast<const SearchExhaustedError*>(&e)) return "search-exhausted";
  if (dynamic_cast<const DomainError*>(&e)) return "precondition";
  return "internal";
}

Report failure(Report rep, ExitCode code, const std::string& kind, const std::string& message) {
  rep.result = {{"error", {{"kind", kind}, {"message", message}}}};
  rep.factors.reset();
  rep.summary = {kind + ": " + message};
  rep.provenance.clear();
  rep.exit_status = static_cast<int>(code);
  return rep;
}

Integer parse_positive(const std::string& flag, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(flag + " expects a positive integer, got '" + text + "'");
  return Integer(text);
}

}  // namespace

Report run(const Request& request) {
  Report rep;
  rep.command = to_string(request.command);
  try {
    validate(request);
    dispatch(request, rep);
    return rep;
  } catch (const UsageError& e) {
    return failure(std::move(rep), ExitCode::Usage, "usage", e.what());
  } catch (const ParseError& e) {
    return failure(std::move(rep), ExitCode::Parse, "parse", e.what());
  } catch (const Error& e) {
    const std::string kind = kind_of(e);
    return failure(std::move(rep), kind == "internal" ? ExitCode::Internal : ExitCode::Precondition, kind, e.what());
  } catch (const std::exception& e) {
    return failure(std::move(rep), ExitCode::Internal, "internal", e.what());
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramification, embeddings and genus bounds for quaternion and symbol algebras", "brauer"};
  app.require_subcommand(1);
  std::string format = "text", max_witness, unramified_order, extra_places;
  bool oracle = false;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max-witness", max_witness, "distinguisher search cap on |d|");
  app.add_flag("--oracle", oracle, "cross-check against brute force; exit 5 on mismatch");
  app.add_option("--extra-places", extra_places, "places added to S, e.g. 3,5");
  app.add_option("--unramified-order", unramified_order, "override |nBr(K)_V| in genus-bound");

  std::map<Command, std::vector<std::string>> operand_values;
  std::map<Command, CLI::App*> subs;
  for (Command c : all_commands()) {
    auto* sub = app.add_subcommand(to_string(c), describe(c));
    sub->fallthrough();
    const auto& names = operands(c);
    std::string label;
    for (const auto& n : names) label += (label.empty() ? "" : " ") + n;
    sub->add_option("operands", operand_values[c], label)->expected(static_cast<int>(names.size()));
    subs[c] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "brauer: usage: " << e.what() << "\n" << app.help();
    return static_cast<int>(ExitCode::Usage);
  }

  Request req;
  for (const auto& [c, sub] : subs)
    if (sub->parsed()) {
      req.command = c;
      req.arguments = operand_values[c];
    }
  req.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;
  req.oracle = oracle;
  req.extra_places = extra_places;

  Report rep;
  try {
    if (!max_witness.empty()) req.max_witness = parse_positive("--max-witness", max_witness);
    if (!unramified_order.empty()) req.unramified_order = parse_positive("--unramified-order", unramified_order);
    rep = run(req);
  } catch (const UsageError& e) {
    Report base;
    base.command = to_string(req.command);
    rep = failure(std::move(base), ExitCode::Usage, "usage", e.what());
  }

  if (req.format == OutputFormat::Structured) {
    out << to_structured(rep);
  } else if (rep.result.contains("error")) {
    err << "brauer: " << rep.summary.front() << "\n";
  } else {
    out << render_text(rep);
    if (rep.exit_status == static_cast<int>(ExitCode::UnresolvedSquare))
      err << "brauer: some residues are unresolved; results are evidence only\n";
    if (rep.exit_status == static_cast<int>(ExitCode::OracleMismatch))
      err << "brauer: oracle disagrees with the closed form\n";
  }
  return rep.exit_status;
}

}  // namespace brauer::cli
