#include "frontdga/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <thread>

#include "frontdga/bordered.hpp"
#include "frontdga/linear.hpp"

namespace fdga {

FrontDiagram random_front(std::uint64_t seed, std::size_t index, const FuzzParams& params) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const int target = uniform(std::max(1, params.min_vertices), std::max(1, params.max_vertices));
  FrontDiagram f;
  f.name = "fuzz" + std::to_string(index);
  f.events.push_back(LeftCusp{1});
  int strands = 2, crossings = 0;
  while (crossings + strands / 2 < target) {
    if (uniform(0, 9) < 6) {
      int p = uniform(1, strands - 1);
      f.events.push_back(Crossing{p, "c" + std::to_string(++crossings)});
    } else {
      f.events.push_back(LeftCusp{uniform(1, strands + 1)});
      strands += 2;
    }
  }
  for (int j = 1; j <= strands / 2; ++j) f.closure.push_back("x" + std::to_string(j));
  const int cut = uniform(1, static_cast<int>(f.events.size()));
  f.events.insert(f.events.begin() + cut, Divider{"cut"});
  return f;
}

FuzzCase check_front(const FrontDiagram& front, const FuzzParams& params) {
  FuzzCase c;
  c.front = front;
  try {
    PushoutReport r = verify_pushout(front, "cut", params.sweep);
    c.failures = r.failures;
    if (!r.ok() && c.failures.empty()) c.failures.push_back("pushout check failed");
    if (!params.mayer_vietoris || !c.failures.empty()) return c;
    Dga d = chekanov_dga(front, assign_potentials(front), params.sweep);
    std::vector<Augmentation> augs;
    try {
      augs = find_augmentations(d, params.cap);
    } catch (const AugmentationCapExceeded&) {
      c.cap_hit = true;
      return c;
    }
    c.augmentations = augs.size();
    for (std::size_t k = 0; k < augs.size() && k < params.mv_per_case; ++k) {
      MayerVietorisReport mv = mayer_vietoris(front, "cut", augs[k]);
      ++c.mv_runs;
      for (const auto& s : mv.failures) c.failures.push_back("Mayer-Vietoris: " + s);
      if (!mv.ok() && mv.failures.empty()) c.failures.push_back("Mayer-Vietoris check failed");
    }
  } catch (const Error& e) {
    c.failures.push_back(std::string("error: ") + e.what());
  }
  return c;
}

namespace {

// Removes the cusp pair created by event `at`, dropping crossings that touch it.
std::optional<FrontDiagram> without_cusp(const FrontDiagram& f, std::size_t at) {
  FrontDiagram g = f;
  g.events.clear();
  g.overrides.clear();
  std::vector<bool> gone;  // per current position of f
  for (std::size_t i = 0; i < f.events.size(); ++i) {
    const Event& e = f.events[i];
    auto reduced = [&](int q) {  // f-position -> g-position
      return q - static_cast<int>(std::count(gone.begin(), gone.begin() + (q - 1), true));
    };
    if (auto* c = std::get_if<LeftCusp>(&e)) {
      const bool drop = i == at;
      int q = reduced(c->position);
      gone.insert(gone.begin() + (c->position - 1), {drop, drop});
      if (!drop) g.events.push_back(LeftCusp{q});
    } else if (auto* x = std::get_if<Crossing>(&e)) {
      const int p = x->position;
      const bool touches = gone[p - 1] || gone[p];
      if (!touches) g.events.push_back(Crossing{reduced(p), x->label});
      std::swap(gone[p - 1], gone[p]);
    } else {
      g.events.push_back(e);
    }
  }
  g.closure.clear();
  for (std::size_t j = 0; j < f.closure.size(); ++j) {
    bool a = gone[2 * j], b = gone[2 * j + 1];
    if (a != b) return std::nullopt;
    if (!a) g.closure.push_back(f.closure[j]);
  }
  if (g.closure.empty()) return std::nullopt;
  try {
    g.validate();
  } catch (const Error&) {
    return std::nullopt;
  }
  return g;
}

}  // namespace

FrontDiagram minimize_front(const FrontDiagram& front,
                            const std::function<bool(const FrontDiagram&)>& still_fails) {
  FrontDiagram cur = front;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cur.events.size() && !changed; ++i) {
      std::optional<FrontDiagram> cand;
      if (std::holds_alternative<Crossing>(cur.events[i])) {
        cand = cur;
        cand->events.erase(cand->events.begin() + static_cast<std::ptrdiff_t>(i));
        cand->overrides.clear();
      } else if (std::holds_alternative<LeftCusp>(cur.events[i])) {
        cand = without_cusp(cur, i);
      }
      if (cand && still_fails(*cand)) {
        cur = std::move(*cand);
        changed = true;
      }
    }
  }
  return cur;
}

FuzzReport run_fuzz(std::uint64_t seed, std::size_t count, const FuzzParams& params) {
  std::vector<FuzzCase> cases(count);
  std::atomic<std::size_t> next{0};
  unsigned n = params.threads ? params.threads : std::max(1U, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(count, 1)));
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      cases[i] = check_front(random_front(seed, i, params), params);
      cases[i].index = i;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  FuzzReport r;
  r.count = count;
  for (const auto& c : cases) {
    r.augmented += c.augmentations > 0;
    r.mv_runs += c.mv_runs;
    r.cap_hits += c.cap_hit;
    if (c.failures.empty()) {
      ++r.passed;
      continue;
    }
    auto fails = [&](const FrontDiagram& f) { return !check_front(f, params).failures.empty(); };
    FuzzFailure ff;
    ff.index = c.index;
    ff.minimized = minimize_front(c.front, fails);
    ff.failures = check_front(ff.minimized, params).failures;
    r.failures.push_back(std::move(ff));
  }
  return r;
}

}  // namespace fdga
