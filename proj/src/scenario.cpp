#include "vwref/scenario.hpp"

#include "vwref/errors.hpp"
#include "vwref/lambdaring.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace vw {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::string join(const std::vector<std::string>& toks, size_t from, size_t to) {
    std::string out;
    for (size_t i = from; i < to; ++i) {
        if (!out.empty()) out += " ";
        out += toks[i];
    }
    return out;
}

bool is_keyword(const std::string& t) {
    return t == "weight" || t == "count" || t == "sign" || t == "ch" || t == "det";
}

AtomSpec parse_atom_line(const std::vector<std::string>& toks, const std::string& line) {
    AtomSpec a;
    if (toks.size() < 2) throw ParseError("bad atom line: '" + line + "'");
    size_t i = 1;
    if (toks[i] == "line")
        a.kind = AtomSpec::Kind::Line;
    else if (toks[i] == "rank2")
        a.kind = AtomSpec::Kind::Rank2;
    else if (toks[i] == "trivial")
        a.kind = AtomSpec::Kind::Trivial;
    else
        throw ParseError("unknown atom kind '" + toks[i] + "'");
    ++i;

    auto collect = [&](std::string& dst) {
        size_t start = i;
        while (i < toks.size() && !is_keyword(toks[i])) ++i;
        dst = join(toks, start, i);
        if (dst.empty()) throw ParseError("empty expression in atom line: '" + line + "'");
    };

    if (a.kind == AtomSpec::Kind::Line) {
        collect(a.c1);
    } else if (a.kind == AtomSpec::Kind::Rank2) {
        if (i >= toks.size() || toks[i] != "ch") throw ParseError("rank2 atom needs 'ch'");
        ++i;
        collect(a.ch);
        if (i >= toks.size() || toks[i] != "det") throw ParseError("rank2 atom needs 'det'");
        ++i;
        collect(a.det);
    }

    bool saw_weight = false;
    while (i < toks.size()) {
        if (toks[i] == "weight") {
            ++i;
            size_t start = i;
            while (i < toks.size() && !is_keyword(toks[i])) ++i;
            a.weight = join(toks, start, i);
            saw_weight = true;
        } else if (toks[i] == "count") {
            ++i;
            size_t start = i;
            while (i < toks.size() && !is_keyword(toks[i])) ++i;
            a.count = join(toks, start, i);
        } else if (toks[i] == "sign") {
            ++i;
            if (i >= toks.size()) throw ParseError("missing sign value");
            a.sign = (toks[i] == "-") ? -1 : +1;
            ++i;
        } else {
            throw ParseError("unexpected token '" + toks[i] + "' in atom line");
        }
    }
    if (!saw_weight) throw ParseError("atom line missing weight: '" + line + "'");
    return a;
}

std::string quoted_part(const std::string& line) {
    size_t a = line.find('"');
    size_t b = line.rfind('"');
    if (a == std::string::npos || b <= a) throw ParseError("missing quoted string: '" + line + "'");
    return line.substr(a + 1, b - a - 1);
}

} // namespace

Bindings Scenario::defaults() const {
    Bindings b;
    for (const auto& bs : binds) b[bs.name] = bs.value;
    return b;
}

ScenarioFile parse_scenario_text(const std::string& text) {
    ScenarioFile out;
    std::istringstream is(text);
    std::string line;
    Scenario* cur = nullptr;
    std::vector<AtomSpec>* atom_block = nullptr;

    while (std::getline(is, line)) {
        std::string raw = line;
        // strip comments, but not inside quotes
        size_t h = std::string::npos;
        bool in_q = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_q = !in_q;
            if (line[i] == '#' && !in_q) {
                h = i;
                break;
            }
        }
        if (h != std::string::npos) line = line.substr(0, h);
        line = strip(line);
        if (line.empty()) continue;
        auto toks = split_ws(line);

        if (!cur) {
            if (toks.size() == 3 && toks[0] == "scenario" && toks[2] == "{") {
                out.scenarios.emplace_back();
                cur = &out.scenarios.back();
                cur->name = toks[1];
                continue;
            }
            if (toks.size() == 3 && toks[0] == "ring" && toks[2] == "{") {
                // capture the whole ring block verbatim
                std::string block = line + "\n";
                while (std::getline(is, line)) {
                    block += line + "\n";
                    if (strip(line) == "}") break;
                }
                out.ring_blocks.push_back(block);
                continue;
            }
            throw ParseError("scenario text: unexpected top-level line '" + line + "'");
        }

        if (atom_block) {
            if (toks[0] == "}") {
                atom_block = nullptr;
                continue;
            }
            if (toks[0] != "atom") throw ParseError("expected atom line, got '" + line + "'");
            atom_block->push_back(parse_atom_line(toks, line));
            continue;
        }

        if (toks[0] == "}") {
            cur = nullptr;
            continue;
        }
        if (toks[0] == "title") {
            cur->title = quoted_part(raw);
        } else if (toks[0] == "kind" && toks.size() == 2) {
            if (toks[1] == "localize")
                cur->kind = Scenario::Kind::Localize;
            else if (toks[1] == "series")
                cur->kind = Scenario::Kind::Series;
            else if (toks[1] == "wallcross")
                cur->kind = Scenario::Kind::Wallcross;
            else if (toks[1] == "identity")
                cur->kind = Scenario::Kind::Identity;
            else
                throw ParseError("unknown scenario kind '" + toks[1] + "'");
        } else if (toks[0] == "op" && toks.size() == 2) {
            cur->op = toks[1];
        } else if (toks[0] == "bind" && toks.size() == 4 && toks[2] == "=") {
            cur->binds.push_back({toks[1], std::stol(toks[3])});
        } else if (toks[0] == "ring") {
            cur->loc.ring = toks.size() > 1 ? toks[1] : "";
            cur->loc.ring_arg = toks.size() > 2 ? toks[2] : "";
        } else if (toks[0] == "prefactor") {
            cur->loc.prefactor = join(toks, 1, toks.size());
        } else if (toks[0] == "tangent") {
            cur->loc.tangent = join(toks, 1, toks.size());
        } else if (toks[0] == "numerator" && toks.back() == "{") {
            atom_block = &cur->loc.numerator;
        } else if (toks[0] == "nvir" && toks.back() == "{") {
            cur->loc.nvir_is_dual = (toks.size() == 3 && toks[1] == "dual");
            atom_block = &cur->loc.nvir;
        } else if (toks[0] == "profile" && toks.size() == 5 && toks[1] == "N") {
            cur->wc.divisibility = std::stoi(toks[2]);
            if (toks[3] != "hzero") throw ParseError("profile line: expected 'hzero'");
            cur->wc.hzero = (toks[4] == "yes" || toks[4] == "true");
        } else if (toks[0] == "chi" && toks.size() == 4 && toks[2] == "=") {
            cur->wc.chi.emplace_back(std::stoi(toks[1]), std::stol(toks[3]));
        } else if (toks[0] == "vw" && toks.size() >= 3) {
            cur->wc.vw.emplace_back(std::stoi(toks[1]), quoted_part(raw));
        } else if (toks[0] == "golden") {
            GoldenSpec gs;
            gs.value = quoted_part(raw);
            for (size_t i = 1; i < toks.size(); ++i) {
                if (toks[i][0] == '"') break;
                auto eq = toks[i].find('=');
                if (eq == std::string::npos) break;
                gs.binds.emplace_back(toks[i].substr(0, eq), std::stol(toks[i].substr(eq + 1)));
            }
            cur->goldens.push_back(gs);
        } else {
            throw ParseError("scenario text: unrecognized line '" + line + "'");
        }
    }
    if (cur) throw ParseError("scenario text: missing closing '}'");
    return out;
}

static void serialize_atoms(std::ostringstream& os, const std::string& header,
                            const std::vector<AtomSpec>& atoms) {
    os << "  " << header << " {\n";
    for (const auto& a : atoms) {
        os << "    atom ";
        switch (a.kind) {
        case AtomSpec::Kind::Line: os << "line " << a.c1 << " "; break;
        case AtomSpec::Kind::Rank2: os << "rank2 ch " << a.ch << " det " << a.det << " "; break;
        case AtomSpec::Kind::Trivial: os << "trivial "; break;
        }
        os << "weight " << a.weight;
        if (a.count != "1") os << " count " << a.count;
        if (a.sign < 0) os << " sign -";
        os << "\n";
    }
    os << "  }\n";
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream os;
    os << "scenario " << s.name << " {\n";
    if (!s.title.empty()) os << "  title \"" << s.title << "\"\n";
    os << "  kind ";
    switch (s.kind) {
    case Scenario::Kind::Localize: os << "localize"; break;
    case Scenario::Kind::Series: os << "series"; break;
    case Scenario::Kind::Wallcross: os << "wallcross"; break;
    case Scenario::Kind::Identity: os << "identity"; break;
    }
    os << "\n";
    if (!s.op.empty()) os << "  op " << s.op << "\n";
    for (const auto& b : s.binds) os << "  bind " << b.name << " = " << b.value << "\n";
    if (s.kind == Scenario::Kind::Localize) {
        os << "  ring " << s.loc.ring;
        if (!s.loc.ring_arg.empty()) os << " " << s.loc.ring_arg;
        os << "\n";
        os << "  prefactor " << s.loc.prefactor << "\n";
        serialize_atoms(os, "numerator", s.loc.numerator);
        serialize_atoms(os, s.loc.nvir_is_dual ? "nvir dual" : "nvir", s.loc.nvir);
        os << "  tangent " << s.loc.tangent << "\n";
    }
    if (s.kind == Scenario::Kind::Wallcross && s.op == "desk") {
        os << "  profile N " << s.wc.divisibility << " hzero " << (s.wc.hzero ? "yes" : "no")
           << "\n";
        for (const auto& [m, c] : s.wc.chi) os << "  chi " << m << " = " << c << "\n";
        for (const auto& [m, v] : s.wc.vw) os << "  vw " << m << " \"" << v << "\"\n";
    }
    for (const auto& gs : s.goldens) {
        os << "  golden";
        for (const auto& [k, v] : gs.binds) os << " " << k << "=" << v;
        os << " \"" << gs.value << "\"\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------- registry

ScenarioRegistry::ScenarioRegistry() { load_text(builtin_scenario_text()); }

ScenarioRegistry& ScenarioRegistry::instance() {
    static ScenarioRegistry reg;
    return reg;
}

void ScenarioRegistry::load_text(const std::string& text) {
    ScenarioFile f = parse_scenario_text(text);
    for (const auto& block : f.ring_blocks) {
        RingPtr r = CohRing::from_text(block);
        custom_rings_[r->name()] = r;
    }
    for (const auto& s : f.scenarios) scenarios_[s.name] = s;
}

const Scenario& ScenarioRegistry::get(const std::string& name) const {
    auto it = scenarios_.find(name);
    if (it == scenarios_.end()) throw UnknownScenario("no scenario named '" + name + "'");
    return it->second;
}

std::vector<std::string> ScenarioRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [n, s] : scenarios_) out.push_back(n);
    return out;
}

RingPtr ScenarioRegistry::ring_for(const LocalizeSpec& spec) const {
    auto genus_arg = [&]() -> ParamPoly {
        if (spec.ring_arg.empty())
            throw ParseError("ring '" + spec.ring + "' needs a genus argument");
        if (auto idx = ParamRegistry::instance().find(spec.ring_arg); idx)
            return ParamPoly::symbol(spec.ring_arg);
        return ParamPoly(rat_parse(spec.ring_arg));
    };
    if (spec.ring == "point") return CohRing::point();
    if (spec.ring == "curve") return CohRing::curve(genus_arg());
    if (spec.ring == "cxc") return CohRing::cxc(genus_arg());
    if (spec.ring == "surface") return CohRing::surface(genus_arg());
    if (spec.ring == "custom") {
        auto it = custom_rings_.find(spec.ring_arg);
        if (it == custom_rings_.end())
            throw ParseError("unknown custom ring '" + spec.ring_arg + "'");
        return it->second;
    }
    throw ParseError("unknown ring selector '" + spec.ring + "'");
}

FixedLocusData build_localize_data(const Scenario& s, const Bindings& binds) {
    if (s.kind != Scenario::Kind::Localize)
        throw CalcError("scenario '" + s.name + "' is not a localization scenario");
    RingPtr ring = ScenarioRegistry::instance().ring_for(s.loc);

    auto build = [&](const std::vector<AtomSpec>& specs) {
        EqKClass out(ring);
        for (const auto& a : specs) {
            long w = eval_integer(parse_expression(a.weight), binds);
            long count = eval_integer(parse_expression(a.count), binds);
            if (count < 0) throw CalcError("negative atom count");
            for (long i = 0; i < count; ++i) {
                switch (a.kind) {
                case AtomSpec::Kind::Line:
                    out.add(Atom::line(parse_cohclass(a.c1, ring, binds), static_cast<int>(w),
                                       a.sign));
                    break;
                case AtomSpec::Kind::Rank2:
                    out.add(Atom::rank2(parse_cohclass(a.ch, ring, binds),
                                        parse_cohclass(a.det, ring, binds), static_cast<int>(w),
                                        a.sign));
                    break;
                case AtomSpec::Kind::Trivial:
                    out.add(Atom::trivial(ring, static_cast<int>(w), a.sign));
                    break;
                }
            }
        }
        return out;
    };

    FixedLocusData data;
    data.base = ring;
    data.numerator = build(s.loc.numerator);
    EqKClass nv = build(s.loc.nvir);
    data.nvir = s.loc.nvir_is_dual ? dual(nv) : nv;
    data.tangent_ch = parse_cohclass(s.loc.tangent, ring, binds);
    data.prefactor = parse_ratfunc(s.loc.prefactor, binds);
    return data;
}

// ----------------------------------------------------------------- results

bool RunResult::ok() const {
    if (golden_match && !*golden_match) return false;
    if (symmetric && !*symmetric) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string RunResult::to_json() const {
    nlohmann::json j;
    j["scenario"] = scenario;
    j["bindings"] = nlohmann::json::object();
    for (const auto& [k, v] : bindings) j["bindings"][k] = v;
    j["result_canonical"] = result_canonical ? nlohmann::json(*result_canonical) : nullptr;
    j["t1_value"] = t1_value ? nlohmann::json(*t1_value) : nullptr;
    j["symmetric"] = symmetric ? nlohmann::json(*symmetric) : nullptr;
    j["golden_match"] = golden_match ? nlohmann::json(*golden_match) : nullptr;
    j["origin_pole"] = origin_pole;
    j["series"] = nlohmann::json::array();
    for (const auto& r : series)
        j["series"].push_back({{"q", r.q_exp},
                               {"coefficient", r.canonical},
                               {"t1", r.t1},
                               {"symmetric", r.symmetric}});
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    j["ok"] = ok();
    return j.dump(2);
}

std::string RunResult::to_text(bool quiet) const {
    std::ostringstream os;
    if (quiet) {
        os << (ok() ? "PASS" : "FAIL") << " " << scenario << "\n";
        return os.str();
    }
    os << (ok() ? "PASS" : "FAIL") << " " << scenario;
    if (!bindings.empty()) {
        os << " [";
        bool first = true;
        for (const auto& [k, v] : bindings) {
            if (!first) os << ", ";
            first = false;
            os << k << "=" << v;
        }
        os << "]";
    }
    os << "\n";
    if (result_canonical) os << "  result    " << *result_canonical << "\n";
    if (t1_value) os << "  t=1       " << *t1_value << "\n";
    if (symmetric) os << "  symmetric " << (*symmetric ? "yes" : "NO") << "\n";
    if (golden_match) os << "  golden    " << (*golden_match ? "match" : "MISMATCH") << "\n";
    if (origin_pole) os << "  note      pole at the origin t=0\n";
    for (const auto& r : series) {
        os << "  q^" << r.q_exp << "  " << r.canonical << "\n";
        os << "        t=1: " << r.t1 << (r.symmetric ? "" : "   [not symmetric]") << "\n";
    }
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.label;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

// ----------------------------------------------------------------- runners

namespace {

void run_localize(const Scenario& s, const Bindings& binds, RunResult& res) {
    FixedLocusData data = build_localize_data(s, binds);
    RatFunc val = chi_t(data);
    res.result_canonical = val.str();
    res.symmetric = check_symmetry(val);
    res.origin_pole = origin_valuation(val) < 0;
    ParamPoly t1 = eval_at_t1(val);
    res.t1_value = t1.str();

    res.checks.push_back(
        {"denominator supported on cyclotomic factors", denominator_is_cyclotomic(val), ""});
    bool line_atoms_only = true;
    for (const auto& a : data.nvir.atoms())
        if (a.kind == Atom::Kind::Rank2) line_atoms_only = false;
    if (line_atoms_only) {
        ParamPoly oracle = euler_oracle(data);
        res.checks.push_back({"t=1 value equals cohomological localization",
                              oracle == t1,
                              oracle == t1 ? "" : "oracle: " + oracle.str()});
    }

    for (const auto& gs : s.goldens) {
        bool applies = true;
        for (const auto& [k, v] : gs.binds) {
            auto it = binds.find(k);
            if (it == binds.end() || it->second != v) applies = false;
        }
        if (!applies) continue;
        RatFunc golden = parse_ratfunc(gs.value);
        res.golden_match = (golden == val) && (golden.str() == *res.result_canonical);
        break;
    }
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

void push_series_rows(RunResult& res, const QSeries& qs) {
    for (const auto& [e, c] : qs.coeffs()) {
        SeriesRow row;
        row.q_exp = e;
        row.canonical = c.str();
        row.t1 = eval_at_t1(c).str();
        row.symmetric = is_bar_symmetric(c);
        res.series.push_back(row);
    }
}

void run_series(const Scenario& s, const Bindings& binds, RunResult& res) {
    if (s.op == "delta") {
        int order = static_cast<int>(binds.at("order"));
        QSeries d = delta_tilde(order);
        push_series_rows(res, d);
        bool sym = true;
        for (const auto& r : res.series) sym = sym && r.symmetric;
        res.checks.push_back({"coefficients symmetric under bar", sym, ""});

        // t = 1 collapses the Jacobi form to the 24th eta power
        QSeries eta(order);
        eta.set_coeff(0, RatFunc(1));
        for (int k = 1; k <= order; ++k) {
            QSeries f(order);
            f.set_coeff(0, RatFunc(1));
            f.set_coeff(k, RatFunc(-1));
            for (int i = 0; i < 24; ++i) eta = eta * f;
        }
        eta = eta.shift_q(1);
        bool eta_ok = true;
        for (int e = 1; e <= order; ++e)
            eta_ok = eta_ok && (RatFunc(eval_at_t1(d.coeff(e))) == eta.coeff(e));
        res.checks.push_back({"t=1 specialization is the discriminant eta product", eta_ok, ""});

        QSeries prod = d * d.inverse();
        bool inv_ok = true;
        for (int e = 0; e <= prod.known_to(); ++e)
            inv_ok = inv_ok && (prod.coeff(e) == (e == 0 ? RatFunc(1) : RatFunc()));
        res.checks.push_back({"series inverse is two-sided", inv_ok, ""});

        RatFunc h1 = hilb_chi(1, order);
        RatFunc hodge = RatFunc(2) + RatFunc(20) * RatFunc::s_power(2) +
                        RatFunc(2) * RatFunc::s_power(4);
        res.checks.push_back(
            {"genus of one point recovers the K3 Hodge numbers", h1 == hodge, h1.str()});
        res.checks.push_back({"genus of zero points is 1", hilb_chi(0, order) == RatFunc(1), ""});
    } else if (s.op == "k3") {
        int r = static_cast<int>(binds.at("r"));
        int order = static_cast<int>(binds.at("order"));
        QSeries out = vw_k3_series(r, order);
        push_series_rows(res, out);
        bool sym = true;
        for (const auto& row : res.series) sym = sym && row.symmetric;
        res.checks.push_back({"coefficients symmetric under bar", sym, ""});
        if (is_prime(r)) {
            QSeries rhs = k3_prime_rank_rhs(r, order);
            res.checks.push_back(
                {"matches the prime-rank closed form", out.agrees_with(rhs), ""});
        } else {
            res.checks.push_back({"composite rank: divisor-sum output is conjectural, not gated",
                                  true, ""});
        }
        if (r == 2) {
            // the divisibility selection against the literal (f(q)+f(-q))/2
            int need = std::max(1, 2 * (order - 2));
            QSeries dinv = delta_tilde(need + 2).inverse();
            QSeries avg = (dinv + dinv.negate_q()) * RatFunc(Rat(1, 2));
            QSeries sel = dinv.select_divisible(2);
            bool avg_ok = true;
            for (const auto& [e, c] : avg.coeffs()) {
                if (e % 2 != 0) {
                    avg_ok = false;
                    break;
                }
                if (e / 2 <= sel.known_to()) avg_ok = avg_ok && (sel.coeff(e / 2) == c);
            }
            res.checks.push_back(
                {"divisibility selection equals literal root-of-unity average", avg_ok, ""});
        }
    } else if (s.op == "gentype") {
        long P2 = binds.at("P2");
        int order = static_cast<int>(binds.at("order"));
        QSeries out = gen_type_series(P2, order);
        push_series_rows(res, out);

        RatFunc sign = (P2 % 2 != 0) ? RatFunc(-1) : RatFunc(1);
        RatFunc q2pow = quantum_integer(2).pow(P2);
        RatFunc g = RatFunc::symbol("g"), c2 = RatFunc::symbol("c2");
        RatFunc gm1 = g - RatFunc(1);
        std::vector<RatFunc> closed = {
            sign / q2pow,
            sign * (RatFunc(2) - RatFunc(2) * g) / q2pow,
            sign / (RatFunc(12) * q2pow) *
                (RatFunc(24) * gm1 * gm1 +
                 parse_ratfunc("s^-4 - 12*s^-2 - 14 - 12*s^2 + s^4") * gm1 +
                 parse_ratfunc("s^-4 + 10 + s^4") * c2)};
        bool closed_ok = true;
        for (int e = 0; e <= order; ++e)
            closed_ok = closed_ok && (out.coeff(e) == closed[static_cast<size_t>(e)]);
        res.checks.push_back({"matches the assembled closed form", closed_ok, ""});

        RatFunc half = RatFunc(1) / parse_ratfunc("(-2)^P2", binds);
        std::vector<ParamPoly> t1exp = {
            eval_at_t1(half), eval_at_t1(half * (RatFunc(2) - RatFunc(2) * g)),
            eval_at_t1(half * (gm1 * (RatFunc(2) * g - RatFunc(5)) + c2))};
        bool t1_ok = true;
        for (int e = 0; e <= order; ++e)
            t1_ok = t1_ok && (eval_at_t1(out.coeff(e)) == t1exp[static_cast<size_t>(e)]);
        res.checks.push_back({"t=1 specialization", t1_ok, ""});

        bool sym = true;
        for (const auto& row : res.series) sym = sym && row.symmetric;
        res.checks.push_back({"coefficients symmetric under bar", sym, ""});
    } else {
        throw CalcError("unknown series op '" + s.op + "'");
    }
}

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> ex(-3, 3), co(-4, 4);
    HalfLaurent h;
    for (int i = 0; i < 4; ++i) h.add_term(ex(rng), ParamPoly(Rat(co(rng))));
    if (h.is_zero()) h = HalfLaurent(Rat(1));
    return RatFunc(h);
}

// numerical wall-crossing sum with [chi] -> chi, over values at t=1
ParamPoly numeric_desk_sum(const ChargeProfile& p, const std::map<int, ParamPoly>& vw1,
                           int level) {
    ParamPoly total;
    std::vector<int> tuple;
    std::function<void(int, const ParamPoly&)> rec = [&](int rest, const ParamPoly& part) {
        if (rest == 0) {
            Rat fact(1);
            for (size_t i = 2; i <= tuple.size(); ++i) fact *= static_cast<long>(i);
            Rat coef = Rat(tuple.size() % 2 ? -1 : 1) / fact;
            total += part * coef;
            return;
        }
        for (int m = 1; m <= rest; ++m) {
            long chi = p.chi(m);
            tuple.push_back(m);
            rec(rest - m, part * vw1.at(m) * Rat(chi % 2 ? -chi : chi));
            tuple.pop_back();
        }
    };
    rec(level, ParamPoly(Rat(1)));
    return total;
}

void run_wallcross(const Scenario& s, const Bindings& binds, RunResult& res) {
    if (s.op == "desk") {
        ChargeProfile prof;
        prof.divisibility = s.wc.divisibility;
        prof.hzero = s.wc.hzero;
        for (const auto& [m, c] : s.wc.chi) prof.chi_of_multiple[m] = c;
        std::map<int, RatFunc> vwm;
        for (const auto& [m, v] : s.wc.vw) vwm[m] = parse_ratfunc(v, binds);
        RatFunc P = pairs_from_vw(prof, vwm);
        res.result_canonical = P.str();
        res.t1_value = eval_at_t1(P).str();
        res.symmetric = check_symmetry(P);
        res.checks.push_back({"conversion round-trips on these inputs",
                              vw_from_pairs(prof, pairs_all_levels(prof, vwm)) == vwm, ""});
        for (const auto& gs : s.goldens) {
            bool applies = true;
            for (const auto& [k, v] : gs.binds) {
                auto it = binds.find(k);
                if (it == binds.end() || it->second != v) applies = false;
            }
            if (!applies) continue;
            res.golden_match = (parse_ratfunc(gs.value) == P);
            break;
        }
    } else if (s.op == "pairs_pg") {
        long pg = binds.at("p_g");
        long chi = binds.at("chi");
        // the pair invariant in its pre-simplified form -p_g [chi]_{t^2} / [2]^p_g
        RatFunc P = -RatFunc(Rat(pg)) * substitute_tr(quantum_integer(chi), 2) /
                    quantum_integer(2).pow(pg);
        ChargeProfile prof;
        prof.divisibility = 1;
        prof.chi_of_multiple[1] = 2 * chi;
        prof.hzero = false;
        auto vwm = vw_from_pairs(prof, {{1, P}});
        RatFunc VW = vwm.at(1);

        RatFunc Pexp = -RatFunc(Rat(pg)) * quantum_integer(2 * chi) /
                       quantum_integer(2).pow(pg + 1);
        RatFunc VWexp = RatFunc(Rat(pg)) / quantum_integer(2).pow(pg + 1);
        res.result_canonical = VW.str();
        res.t1_value = eval_at_t1(VW).str();
        res.symmetric = check_symmetry(VW) && check_symmetry(P);
        res.checks.push_back({"pair invariant closed form", P == Pexp, P.str()});
        res.checks.push_back({"inverted invariant closed form", VW == VWexp, VW.str()});
        res.golden_match = (P == Pexp) && (VW == VWexp);
    } else if (s.op == "roundtrip") {
        int N = static_cast<int>(binds.at("N"));
        std::mt19937 rng(static_cast<unsigned>(binds.at("seed")));

        bool rt_ok = true, t1_ok = true;
        for (int n = 1; n <= N; ++n) {
            for (int trial = 0; trial < 4; ++trial) {
                ChargeProfile p;
                p.divisibility = n;
                p.hzero = true;
                std::uniform_int_distribution<long> chid(1, 9);
                for (int m = 1; m <= n; ++m) p.chi_of_multiple[m] = chid(rng);
                std::map<int, RatFunc> vwm;
                for (int m = 1; m <= n; ++m) vwm[m] = random_ratfunc(rng);
                auto pairs = pairs_all_levels(p, vwm);
                rt_ok = rt_ok && (vw_from_pairs(p, pairs) == vwm);
                std::map<int, ParamPoly> vw1;
                for (int m = 1; m <= n; ++m) vw1[m] = eval_at_t1(vwm.at(m));
                for (int m = 1; m <= n; ++m)
                    t1_ok = t1_ok && (eval_at_t1(pairs.at(m)) == numeric_desk_sum(p, vw1, m));
            }
        }
        res.checks.push_back({"pair/invariant conversion round-trips", rt_ok, ""});
        res.checks.push_back({"specialization at t=1 commutes with the conversion", t1_ok, ""});

        bool ball_ok = true;
        for (int r = 1; r <= 4; ++r)
            for (long chi0 = 5; chi0 <= 9; ++chi0)
                for (long d = 0; d <= 2; ++d) {
                    RatFunc H = hilb_chi(static_cast<int>(d), 4);
                    long vd = 2 * d + chi0 - 1;
                    RatFunc chivir = substitute_tr(pbundle_chi(chi0, H), r);
                    RatFunc lhs = uniform_contribution(r, vd, r * chi0, chivir);
                    RatFunc vw1 = RatFunc::s_power(static_cast<int>(-2 * d)) * H;
                    ChargeProfile p;
                    p.divisibility = r;
                    p.hzero = false;
                    for (int m = 1; m <= r; ++m) p.chi_of_multiple[m] = m * chi0;
                    RatFunc rhs = pairs_from_vw(p, {{r, multiple_cover(vw1, r)}});
                    ball_ok = ball_ok && (lhs == rhs);
                }
        res.checks.push_back(
            {"uniform thickenings reduce to the multiple-cover formula", ball_ok, ""});

        // uniform inputs on a K3: inversion recovers the divisor sums of
        // multiple covers
        bool k3_ok = true;
        {
            int NN = 3;
            long chi0 = 5, d1 = 2;
            auto du = [&](int u) { return 1 + static_cast<long>(u) * u * (d1 - 1); };
            ChargeProfile p;
            p.divisibility = NN;
            p.hzero = false;
            for (int m = 1; m <= NN; ++m) p.chi_of_multiple[m] = m * chi0;
            std::map<int, RatFunc> pairs;
            for (int M = 1; M <= NN; ++M) {
                RatFunc sum;
                for (int r = 1; r <= M; ++r) {
                    if (M % r != 0) continue;
                    int u = M / r;
                    RatFunc H = hilb_chi(static_cast<int>(du(u)), 12);
                    long vd = 2 * du(u) + u * chi0 - 1;
                    RatFunc chivir = substitute_tr(pbundle_chi(u * chi0, H), r);
                    sum += uniform_contribution(r, vd, M * chi0, chivir);
                }
                pairs[M] = sum;
            }
            auto vwm = vw_from_pairs(p, pairs);
            for (int M = 1; M <= NN; ++M) {
                RatFunc expect;
                for (int r = 1; r <= M; ++r) {
                    if (M % r != 0) continue;
                    int u = M / r;
                    RatFunc vw1u = RatFunc::s_power(static_cast<int>(-2 * du(u))) *
                                   hilb_chi(static_cast<int>(du(u)), 12);
                    expect += multiple_cover(vw1u, r);
                }
                k3_ok = k3_ok && (vwm.at(M) == expect);
            }
        }
        res.checks.push_back({"uniform K3 inputs invert to divisor sums of covers", k3_ok, ""});
    } else {
        throw CalcError("unknown wallcross op '" + s.op + "'");
    }
}

void run_identity(const Scenario& s, const Bindings& binds, RunResult& res) {
    if (s.op == "eagon_northcott") {
        int rmax = static_cast<int>(binds.at("rmax"));
        for (int r0 = 1; r0 <= rmax; ++r0)
            for (int r1 = r0; r1 <= rmax; ++r1)
                res.checks.push_back({"pushforward identity at ranks (" + std::to_string(r0) +
                                          ", " + std::to_string(r1) + ")",
                                      eagon_northcott_check(r0, r1), ""});
        for (int r = 1; r <= rmax; ++r)
            res.checks.push_back({"Koszul alternating form at rank " + std::to_string(r),
                                  corollary_lambda_check(r), ""});
        for (int r = 1; r <= 4; ++r)
            res.checks.push_back({"duality identity at rank " + std::to_string(r),
                                  duality_identity_check(r), ""});
    } else if (s.op == "quantum") {
        long nmax = binds.at("nmax");
        bool stretch_ok = true;
        for (long c = 1; c <= nmax; ++c)
            for (int r = 1; r <= nmax; ++r)
                stretch_ok = stretch_ok && (substitute_tr(quantum_integer(c), r) *
                                                quantum_integer(r) ==
                                            quantum_integer(c * r));
        res.checks.push_back({"stretching identity [c]_{t^r} [r]_t = [cr]_t", stretch_ok, ""});

        bool half_ok = true;
        for (long c = 1; c <= nmax; ++c)
            half_ok = half_ok && (substitute_tr(quantum_integer(c), 2) ==
                                  quantum_integer(2 * c) / quantum_integer(2));
        res.checks.push_back({"doubling identity [c]_{t^2} = [2c]_t / [2]_t", half_ok, ""});

        bool bar_ok = true, t1_ok = true;
        for (long n = -50; n <= 50; ++n) {
            bar_ok = bar_ok && is_bar_symmetric(quantum_integer(n));
            t1_ok = t1_ok && (eval_at_t1(quantum_integer(n)) == ParamPoly(Rat(n)));
        }
        res.checks.push_back({"quantum integers are bar-symmetric", bar_ok, ""});
        res.checks.push_back({"quantum integers specialize to integers at t=1", t1_ok, ""});
    } else {
        throw CalcError("unknown identity op '" + s.op + "'");
    }
}

} // namespace

RunResult run_scenario(const std::string& name, const Bindings& overrides) {
    const Scenario& s = ScenarioRegistry::instance().get(name);
    Bindings binds = s.defaults();
    for (const auto& [k, v] : overrides) {
        if (binds.find(k) == binds.end())
            throw MissingBinding("scenario '" + name + "' has no binding '" + k + "'");
        binds[k] = v;
    }
    RunResult res;
    res.scenario = name;
    res.bindings = binds;
    switch (s.kind) {
    case Scenario::Kind::Localize: run_localize(s, binds, res); break;
    case Scenario::Kind::Series: run_series(s, binds, res); break;
    case Scenario::Kind::Wallcross: run_wallcross(s, binds, res); break;
    case Scenario::Kind::Identity: run_identity(s, binds, res); break;
    }
    return res;
}

std::vector<RunResult> check_all(const std::string& filter) {
    std::vector<RunResult> out;
    for (const auto& name : ScenarioRegistry::instance().names()) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        out.push_back(run_scenario(name));
    }
    return out;
}

} // namespace vw
