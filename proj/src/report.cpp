#include "exegete/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "exegete/error.hpp"

namespace exegete {

using nlohmann::ordered_json;

bool ExegesisResult::ok() const {
    if (expected && *expected != verdict) return false;
    if (galois_verdict && *galois_verdict != verdict) return false;
    if (contrapositive_verdict && *contrapositive_verdict != verdict) return false;
    return true;
}

bool TripleResult::ok() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
}

bool KatResult::ok() const {
    if (expected && *expected != holds) return false;
    return !correspondence || correspondence->agrees();
}

bool RunReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return std::visit([](const auto& r) { return r.ok(); }, c); });
}

namespace {

TripleResult evaluate(const TripleCheck& c, bool force_all) {
    TripleResult out{c.name, c.pre_label, c.prog_label, c.post_label, {}, force_all || c.witness || c.all, {}};
    const Matrix m = matrix(c.triple);
    for (const auto& entry : m.entries) {
        const bool wanted = force_all || std::find(c.exegeses.begin(), c.exegeses.end(), entry.exegesis) != c.exegeses.end();
        if (!wanted) continue;
        std::optional<bool> expected;
        if (auto it = c.expect.find(entry.exegesis); it != c.expect.end()) expected = it->second;
        out.results.push_back({entry.exegesis, entry.verdict, expected, entry.galois_verdict, entry.contrapositive,
                               entry.contrapositive_verdict});
    }
    if (m.witness) {
        const auto& space = *c.triple.prog.space();
        out.witness = WitnessInfo{m.witness->first, m.witness->second, space.describe(m.witness->first),
                                  space.describe(m.witness->second)};
    }
    return out;
}

KatResult evaluate(const KatCheck& c) {
    KatResult out{c.name, kat::to_string(*c.equation.lhs), kat::to_string(*c.equation.rhs),
                  kat::equation_holds(c.equation, c.interpretation), c.expect, std::nullopt};
    if (c.encoding) out.correspondence = kat::correspondence(*c.encoding, c.interpretation, "b", "p", "c");
    return out;
}

const char* valid(bool v) { return v ? "valid" : "invalid"; }
const char* holds(bool v) { return v ? "holds" : "fails"; }
const char* status(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string counterexample_text(const Counterexample& c) {
    return "|S|=" + std::to_string(c.size) + " r=" + c.relation + " b=" + c.pre + " c=" + c.post + " (" + c.detail + ")";
}

ordered_json counterexample_json(const std::optional<Counterexample>& c) {
    if (!c) return nullptr;
    return {{"size", c->size}, {"relation", c->relation}, {"pre", c->pre}, {"post", c->post}, {"detail", c->detail}};
}

void render_sweep(std::ostringstream& os, const LawSweepReport& r, const std::string& indent) {
    const auto& o = r.options;
    if (o.mode == SweepMode::Exhaustive)
        os << indent << "laws: exhaustive, |S| = 1.." << o.max_size << ", " << r.models << " models\n";
    else
        os << indent << "laws: random, " << o.samples << " samples of |S| = " << o.random_size << ", seed " << o.seed
           << "\n";
    for (const auto& l : r.laws) {
        os << indent << "  " << status(l.ok()) << "  " << pad(l.name, 31) << pad(l.statement, 38) << l.models
           << " models";
        if (!l.ok()) os << ", " << l.violations << " violations";
        os << "\n";
        if (l.counterexample) os << indent << "        counterexample: " << counterexample_text(*l.counterexample) << "\n";
    }
    os << indent << "demonic gap witness: " << (r.demonic_gap ? counterexample_text(*r.demonic_gap) : "none found")
       << "\n";
    os << indent << "summary: " << status(r.ok()) << " (" << r.laws.size() << " laws, " << r.models
       << " models each)\n";
}

void render_triple(std::ostringstream& os, const TripleResult& t) {
    os << "triple " << t.name << ": {" << t.pre << "} " << t.prog << " {" << t.post << "}\n";
    for (const auto& r : t.results) {
        const auto& i = info(r.exegesis);
        os << "  " << (r.expected || !r.ok() ? status(r.ok()) : "-   ") << "  " << pad(i.label, 27)
           << pad(valid(r.verdict), 9);
        os << pad(r.expected ? std::string("expected ") + valid(*r.expected) : "", 18) << i.formula << "\n";
        if (r.galois_verdict) os << "          galois form " << i.galois_formula << ": " << valid(*r.galois_verdict) << "\n";
        if (r.contrapositive)
            os << "          contrapositive " << info(*r.contrapositive).label << " on {!b} p {!c}: "
               << valid(*r.contrapositive_verdict) << "\n";
    }
    if (t.show_witness) {
        os << "  bug witness: ";
        if (t.witness)
            os << "[" << t.witness->from_state << "] -> [" << t.witness->to_state << "]\n";
        else
            os << "none\n";
    }
}

void render_kat(std::ostringstream& os, const KatResult& k) {
    os << "kat " << k.name << ": " << k.lhs << " = " << k.rhs << "\n";
    os << "  " << (k.expected || !k.ok() ? status(k.ok()) : "-   ") << "  ";
    if (k.expected)
        os << pad(holds(k.holds), 9) << "expected " << holds(*k.expected) << "\n";
    else
        os << holds(k.holds) << "\n";
    if (k.correspondence) {
        const auto& c = *k.correspondence;
        os << "  correspondence " << kat::label(c.encoding) << " <=> " << kat::transformer_statement(c.encoding)
           << ": transformer " << valid(c.transformer) << ", " << (c.agrees() ? "agrees" : "DISAGREES") << "\n";
    }
}

ordered_json triple_json(const TripleResult& t) {
    ordered_json j;
    j["name"] = t.name;
    j["kind"] = "triple";
    j["pre"] = t.pre;
    j["prog"] = t.prog;
    j["post"] = t.post;
    j["status"] = t.ok() ? "pass" : "fail";
    j["results"] = ordered_json::array();
    for (const auto& r : t.results) {
        const auto& i = info(r.exegesis);
        ordered_json e;
        e["exegesis"] = i.label;
        e["formula"] = i.formula;
        e["verdict"] = valid(r.verdict);
        e["expected"] = r.expected ? ordered_json(valid(*r.expected)) : ordered_json(nullptr);
        ordered_json partners;
        partners["galois"] = r.galois_verdict
                                 ? ordered_json{{"formula", i.galois_formula}, {"verdict", valid(*r.galois_verdict)}}
                                 : ordered_json(nullptr);
        partners["contrapositive"] =
            r.contrapositive ? ordered_json{{"exegesis", info(*r.contrapositive).label},
                                            {"on", "{!b} p {!c}"},
                                            {"verdict", valid(*r.contrapositive_verdict)}}
                             : ordered_json(nullptr);
        e["partners"] = partners;
        e["status"] = r.ok() ? "pass" : "fail";
        j["results"].push_back(e);
    }
    if (t.show_witness) {
        j["witness"] = t.witness ? ordered_json{{"from", t.witness->from},
                                                {"to", t.witness->to},
                                                {"from_state", t.witness->from_state},
                                                {"to_state", t.witness->to_state}}
                                 : ordered_json(nullptr);
    }
    return j;
}

ordered_json kat_json(const KatResult& k) {
    ordered_json j;
    j["name"] = k.name;
    j["kind"] = "kat";
    j["lhs"] = k.lhs;
    j["rhs"] = k.rhs;
    j["verdict"] = holds(k.holds);
    j["expected"] = k.expected ? ordered_json(holds(*k.expected)) : ordered_json(nullptr);
    if (k.correspondence) {
        const auto& c = *k.correspondence;
        j["correspondence"] = {{"encoding", kat::label(c.encoding)},
                               {"transformer", kat::transformer_statement(c.encoding)},
                               {"transformer_verdict", valid(c.transformer)},
                               {"agrees", c.agrees()}};
    } else {
        j["correspondence"] = nullptr;
    }
    j["status"] = k.ok() ? "pass" : "fail";
    return j;
}

}  // namespace

RunReport run_check(const SpecFile& spec) {
    RunReport rep{spec.source, {}};
    for (const auto& c : spec.checks) {
        if (const auto* t = std::get_if<TripleCheck>(&c)) rep.checks.emplace_back(evaluate(*t, false));
        else if (const auto* k = std::get_if<KatCheck>(&c)) rep.checks.emplace_back(evaluate(*k));
        else {
            const auto& l = std::get<LawsCheck>(c);
            rep.checks.emplace_back(LawsResult{l.name, run_laws(l.options)});
        }
    }
    return rep;
}

RunReport run_matrix(const SpecFile& spec, std::string_view triple) {
    const Check* c = spec.find_check(triple);
    if (!c || !std::holds_alternative<TripleCheck>(*c))
        throw SemanticError(spec.source + ": no triple check named '" + std::string(triple) + "'");
    return RunReport{spec.source, {evaluate(std::get<TripleCheck>(*c), true)}};
}

RunReport run_kat(const SpecFile& spec, std::string_view equation) {
    const Check* c = spec.find_check(equation);
    if (!c || !std::holds_alternative<KatCheck>(*c))
        throw SemanticError(spec.source + ": no kat check named '" + std::string(equation) + "'");
    return RunReport{spec.source, {evaluate(std::get<KatCheck>(*c))}};
}

std::string render_text(const RunReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        if (const auto* t = std::get_if<TripleResult>(&c)) render_triple(os, *t);
        else if (const auto* k = std::get_if<KatResult>(&c)) render_kat(os, *k);
        else {
            const auto& l = std::get<LawsResult>(c);
            os << "laws " << l.name << ":\n";
            render_sweep(os, l.sweep, "  ");
        }
    }
    const std::size_t n = report.checks.size();
    os << "result: " << status(report.ok()) << " (" << n << (n == 1 ? " check in " : " checks in ") << report.source
       << ")\n";
    return os.str();
}

ordered_json to_json(const RunReport& report) {
    ordered_json j;
    j["source"] = report.source;
    j["status"] = report.ok() ? "pass" : "fail";
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
        if (const auto* t = std::get_if<TripleResult>(&c)) j["checks"].push_back(triple_json(*t));
        else if (const auto* k = std::get_if<KatResult>(&c)) j["checks"].push_back(kat_json(*k));
        else {
            const auto& l = std::get<LawsResult>(c);
            j["checks"].push_back(
                {{"name", l.name}, {"kind", "laws"}, {"sweep", to_json(l.sweep)}, {"status", l.ok() ? "pass" : "fail"}});
        }
    }
    return j;
}

std::string render_text(const LawSweepReport& report) {
    std::ostringstream os;
    render_sweep(os, report, "");
    return os.str();
}

ordered_json to_json(const LawSweepReport& r) {
    ordered_json j;
    const auto& o = r.options;
    if (o.mode == SweepMode::Exhaustive) {
        j["mode"] = "exhaustive";
        j["max_size"] = o.max_size;
    } else {
        j["mode"] = "random";
        j["size"] = o.random_size;
        j["samples"] = o.samples;
        j["seed"] = o.seed;
    }
    j["models_per_law"] = r.models;
    j["laws"] = ordered_json::array();
    for (const auto& l : r.laws) {
        j["laws"].push_back({{"name", l.name},
                             {"statement", l.statement},
                             {"status", l.ok() ? "pass" : "fail"},
                             {"models", l.models},
                             {"violations", l.violations},
                             {"counterexample", counterexample_json(l.counterexample)}});
    }
    j["demonic_gap_witness"] = counterexample_json(r.demonic_gap);
    j["status"] = r.ok() ? "pass" : "fail";
    return j;
}

}  // namespace exegete
