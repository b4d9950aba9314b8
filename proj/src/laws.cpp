#include "exegete/laws.hpp"

#include <algorithm>
#include <random>
#include <exception>
#include <mutex>
#include <thread>

#include "exegete/error.hpp"
#include "exegete/topkat.hpp"
#include "exegete/transformers.hpp"
#include "exegete/triples.hpp"

namespace exegete {

namespace {

enum LawId : std::size_t {
    GaloisWlpSp,
    GaloisWpSlp,
    ContraDwlpAwp,
    ContraAwpDwlp,
    ContraAspDslp,
    ContraDslpAsp,
    DeMorganAwpDwlp,
    DeMorganAspDslp,
    DeMorganDwpAwlp,
    DeMorganDspAslp,
    KatPartialCorrectness,
    KatIncorrectness,
    KatAngelicTotal,
    KatPartialIncorrectness,
    KatTopBpcTopPc,
    KatBpcTopBpTop,
    BugWitnessEquiv,
    DemonicImpliesAngelic,
    kLawCount,
};

// One sweep element: the model plus its position in sweep order.
struct Sample {
    std::size_t size;
    std::uint64_t ordinal;
    Relation r;
    Predicate b;
    Predicate c;
};

struct Tally {
    std::vector<LawResult> laws;
    std::optional<Counterexample> gap;
    std::uint64_t models = 0;
};

Counterexample describe(const Sample& s, std::string detail) {
    return {s.size, s.ordinal, to_string(s.r), to_string(s.b), to_string(s.c), std::move(detail)};
}

std::string sides(bool lhs, bool rhs) {
    return std::string("lhs=") + (lhs ? "true" : "false") + " rhs=" + (rhs ? "true" : "false");
}

void record(LawResult& law, bool ok, const Sample& s, const std::string& detail) {
    ++law.models;
    if (ok) return;
    ++law.violations;
    if (!law.counterexample || s.ordinal < law.counterexample->ordinal) law.counterexample = describe(s, detail);
}

void check_sample(const Sample& s, bool fault, Tally& t) {
    const auto& [size, ordinal, r, b, c] = s;
    const Predicate nb = complement(b);
    const Predicate nc = complement(c);
    ++t.models;

    auto iff = [&](LawId id, bool lhs, bool rhs) { record(t.laws[id], lhs == rhs, s, sides(lhs, rhs)); };
    auto same = [&](LawId id, const Predicate& lhs, const Predicate& rhs) {
        record(t.laws[id], lhs == rhs, s, "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
    };

    const auto galois = check_galois(r, b, c);
    iff(GaloisWlpSp, galois.edges[0].lhs, galois.edges[0].rhs);
    iff(GaloisWpSlp, galois.edges[1].lhs, galois.edges[1].rhs);

    const auto contra = check_contrapositive(r, b, c);
    for (std::size_t i = 0; i < 4; ++i) iff(LawId(ContraDwlpAwp + i), contra.edges[i].lhs, contra.edges[i].rhs);

    same(DeMorganAwpDwlp, awp(r, c), complement(dwlp(r, nc)));
    same(DeMorganAspDslp, asp(r, b), complement(dslp(r, nb)));
    same(DeMorganDwpAwlp, dwp(r, c), complement(awlp(r, nc)));
    same(DeMorganDspAslp, dsp(r, b), complement(aslp(r, nb)));

    kat::Interpretation interp(r.space());
    interp.progs.emplace("p", r);
    interp.tests.emplace("b", b);
    interp.tests.emplace("c", c);
    for (std::size_t i = 0; i < kat::kAllEncodings.size(); ++i) {
        const auto rep = kat::correspondence(kat::kAllEncodings[i], interp, "b", "p", "c");
        iff(LawId(KatPartialCorrectness + i), rep.equation, rep.transformer);
    }

    const bool bpc_nonzero = !kat::eval(*kat::seq({kat::Term::test("b"), kat::Term::prog("p"), kat::Term::test("c")}),
                                        interp)
                                  .empty();
    iff(BugWitnessEquiv, bpc_nonzero, !intersect(b, awp(r, c)).empty());

    const bool demonic = subset(b, fault ? dwlp(r, c) : dwp(r, c));
    const bool angelic = kat::equation_holds(kat::encode(kat::Encoding::AngelicTotalCorrectness, "b", "p", "c"), interp);
    record(t.laws[DemonicImpliesAngelic], !demonic || angelic, s,
           std::string("demonic=") + (demonic ? "true" : "false") + " angelic=" + (angelic ? "true" : "false"));

    if (angelic && !demonic && (!t.gap || ordinal < t.gap->ordinal))
        t.gap = describe(s, "angelic equation holds, b <= dwp(c) fails");
}

Tally fresh_tally() {
    Tally t;
    for (const auto& info : law_catalogue())
        t.laws.push_back({std::string(info.name), std::string(info.statement), 0, 0, std::nullopt});
    return t;
}

void merge(Tally& into, const Tally& from) {
    into.models += from.models;
    for (std::size_t i = 0; i < into.laws.size(); ++i) {
        auto& a = into.laws[i];
        const auto& b = from.laws[i];
        a.models += b.models;
        a.violations += b.violations;
        if (b.counterexample && (!a.counterexample || b.counterexample->ordinal < a.counterexample->ordinal))
            a.counterexample = b.counterexample;
    }
    if (from.gap && (!into.gap || from.gap->ordinal < into.gap->ordinal)) into.gap = from.gap;
}

unsigned thread_count(const LawOptions& o) {
    if (o.threads) return o.threads;
    return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(i, tally) for i in [0, n) over `threads` contiguous chunks.
template <typename Body>
Tally parallel_sweep(std::uint64_t n, unsigned threads, Body body) {
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n, 1)));
    std::vector<Tally> partial(threads, fresh_tally());
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            const std::uint64_t lo = n * t / threads;
            const std::uint64_t hi = n * (t + 1) / threads;
            try {
                for (std::uint64_t i = lo; i < hi; ++i) body(i, partial[t]);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    Tally out = fresh_tally();
    for (const auto& p : partial) merge(out, p);
    return out;
}

Predicate predicate_from_mask(const SpacePtr& space, std::uint64_t mask) {
    Predicate p(space);
    for (std::size_t s = 0; s < space->size(); ++s)
        if ((mask >> s) & 1U) p.insert(s);
    return p;
}

Tally sweep_exhaustive(const LawOptions& o) {
    Tally total = fresh_tally();
    std::uint64_t base = 0;
    for (std::size_t k = 1; k <= o.max_size; ++k) {
        const auto space = StateSpace::anonymous(k);
        const std::uint64_t relations = std::uint64_t{1} << (k * k);
        const std::uint64_t preds = std::uint64_t{1} << k;
        std::vector<Predicate> all_preds;
        for (std::uint64_t m = 0; m < preds; ++m) all_preds.push_back(predicate_from_mask(space, m));

        Tally t = parallel_sweep(relations, thread_count(o), [&](std::uint64_t rel, Tally& tally) {
            Relation r(space);
            for (std::size_t bit = 0; bit < k * k; ++bit)
                if ((rel >> bit) & 1U) r.insert(bit / k, bit % k);
            for (std::uint64_t bm = 0; bm < preds; ++bm)
                for (std::uint64_t cm = 0; cm < preds; ++cm) {
                    const std::uint64_t ordinal = base + (rel * preds + bm) * preds + cm;
                    check_sample({k, ordinal, r, all_preds[bm], all_preds[cm]}, o.inject_dwp_fault, tally);
                }
        });
        merge(total, t);
        base += relations * preds * preds;
    }
    return total;
}

Tally sweep_random(const LawOptions& o) {
    const std::size_t n = o.random_size;
    const auto space = StateSpace::anonymous(n);
    const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::mt19937_64 rng(o.seed);

    std::vector<Sample> samples;
    samples.reserve(o.samples);
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        const std::uint64_t density = rng() >> 56;
        Relation r(space);
        for (std::size_t bit = 0; bit < n * n; ++bit)
            if ((rng() >> 56) < density) r.insert(bit / n, bit % n);
        Predicate b = predicate_from_mask(space, rng() & mask);
        Predicate c = predicate_from_mask(space, rng() & mask);
        samples.push_back({n, i, std::move(r), std::move(b), std::move(c)});
    }
    return parallel_sweep(samples.size(), thread_count(o),
                          [&](std::uint64_t i, Tally& tally) { check_sample(samples[i], o.inject_dwp_fault, tally); });
}

}  // namespace

const std::vector<LawInfo>& law_catalogue() {
    static const std::vector<LawInfo> laws = {
        {"galois-wlp-sp", "b <= dwlp(c) <=> asp(b) <= c"},
        {"galois-wp-slp", "awp(c) <= b <=> c <= dslp(b)"},
        {"contra-dwlp-awp", "b <= dwlp(c) <=> awp(!c) <= !b"},
        {"contra-awp-dwlp", "b <= awp(c) <=> dwlp(!c) <= !b"},
        {"contra-asp-dslp", "asp(b) <= c <=> !c <= dslp(!b)"},
        {"contra-dslp-asp", "c <= asp(b) <=> dslp(!b) <= !c"},
        {"demorgan-awp-dwlp", "awp(c) = !dwlp(!c)"},
        {"demorgan-asp-dslp", "asp(b) = !dslp(!b)"},
        {"demorgan-dwp-awlp", "dwp(c) = !awlp(!c)"},
        {"demorgan-dsp-aslp", "dsp(b) = !aslp(!b)"},
        {"kat-partial-correctness", "top;b;p;c = top;b;p <=> asp(b) <= c"},
        {"kat-incorrectness", "top;b;p;c = top;c <=> c <= asp(b)"},
        {"kat-angelic-total-correctness", "b;p;c;top = b;top <=> b <= awp(c)"},
        {"kat-partial-incorrectness", "b;p;c;top = p;c;top <=> awp(c) <= b"},
        {"kat-topbpc-toppc", "top;b;p;c = top;p;c <=> c <= aslp(b)"},
        {"kat-bpctop-bptop", "b;p;c;top = b;p;top <=> b <= awlp(c)"},
        {"bug-witness", "b;p;c != 0 <=> b & awp(c) != {}"},
        {"demonic-implies-angelic", "b <= dwp(c) => b;p;c;top = b;top"},
    };
    return laws;
}

bool LawSweepReport::ok() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.ok(); });
}

std::uint64_t exhaustive_model_count(std::size_t max_size) {
    std::uint64_t n = 0;
    for (std::size_t k = 1; k <= max_size; ++k) n += (std::uint64_t{1} << (k * k)) << (2 * k);
    return n;
}

LawSweepReport run_laws(const LawOptions& options) {
    if (options.mode == SweepMode::Exhaustive) {
        if (options.max_size == 0) throw Error("--max-size must be at least 1");
        if (options.max_size > kMaxExhaustiveSize)
            throw Error("exhaustive sweeps are limited to --max-size " + std::to_string(kMaxExhaustiveSize) +
                        " (2^(n*n) relations)");
    } else {
        if (options.random_size == 0) throw Error("--size must be at least 1");
        if (options.random_size > 64) throw Error("random sweeps are limited to --size 64");
    }
    Tally t = options.mode == SweepMode::Exhaustive ? sweep_exhaustive(options) : sweep_random(options);
    LawSweepReport rep;
    rep.options = options;
    rep.models = t.models;
    rep.laws = std::move(t.laws);
    rep.demonic_gap = std::move(t.gap);
    return rep;
}

}  // namespace exegete
