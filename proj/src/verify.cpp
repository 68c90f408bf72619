#include "qloop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace qloop {

unsigned thread_count() {
    if (const char* env = std::getenv("QLOOP_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& task) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

using Key = std::pair<std::vector<int>, int>;

std::vector<int> key_of(const RootVec& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

FusionRun verify_fusion(const QuiverOrientation& o, const FusionConfig& cfg) {
    if (cfg.window < 0) throw std::invalid_argument("verify_fusion: negative window");
    if (cfg.d_min > cfg.d_max) throw std::invalid_argument("verify_fusion: empty degree range");
    const RootSystem rs = build_root_system(o.type);
    const ARQuiver ar = build_ar_quiver(o, rs);
    const ShuffleContext ctx(o);
    FusionRun run;
    run.pairs = minimal_pairs_all_refinements(ar);
    std::vector<std::size_t> selected;
    if (cfg.pair) {
        if (*cfg.pair >= run.pairs.size()) throw std::out_of_range("verify_fusion: pair index out of range");
        selected.push_back(*cfg.pair);
    } else {
        for (std::size_t p = 0; p < run.pairs.size(); ++p) selected.push_back(p);
    }
    const auto& roots = rs.positive_roots();

    // Spanning sets shared by pairs with the same sum.
    std::map<Key, std::vector<std::pair<Word, ShuffleElement>>> sets;
    for (std::size_t p : selected) {
        RootVec k = roots[run.pairs[p].alpha] + roots[run.pairs[p].beta];
        for (int d = cfg.d_min; d <= cfg.d_max; ++d) sets[{key_of(k), d}];
    }
    std::vector<std::decay_t<decltype(sets)>::iterator> slots;
    for (auto it = sets.begin(); it != sets.end(); ++it) slots.push_back(it);
    parallel_for(slots.size(), cfg.threads, [&](std::size_t s) {
        const auto& [kv, d] = slots[s]->first;
        ColorDegree k = Eigen::Map<const Eigen::VectorXi>(kv.data(), static_cast<Eigen::Index>(kv.size()));
        slots[s]->second = spanning_set_with_words(ctx, k, d, cfg.window);
    });

    std::vector<const ShuffleElement*> elements;
    for (std::size_t p : selected) {
        const RootVec& a = roots[run.pairs[p].alpha];
        const RootVec& b = roots[run.pairs[p].beta];
        for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
            for (const auto& [word, e] : sets.at({key_of(a + b), d})) {
                run.records.push_back(FusionRecord{p, d, word, {}});
                elements.push_back(&e);
            }
        }
    }
    const std::size_t chunk = 64;
    const std::size_t chunks = (run.records.size() + chunk - 1) / chunk;
    parallel_for(chunks, cfg.threads, [&](std::size_t c) {
        const std::size_t end = std::min(run.records.size(), (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
            auto& rec = run.records[i];
            const RootVec& a = roots[run.pairs[rec.pair_index].alpha];
            const RootVec& b = roots[run.pairs[rec.pair_index].beta];
            rec.report = fusion_residue_check(ctx, a, b, *elements[i]);
            if (!cfg.keep_values && rec.report.pass()) {
                rec.report.residue = RatFunc();
                rec.report.spec = RatFunc();
            }
        }
    });
    for (const auto& rec : run.records) run.failures += !rec.report.pass();
    return run;
}

}  // namespace qloop
