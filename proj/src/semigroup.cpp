#include "semigroup.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace nsg {

namespace {

constexpr i64 kInf = std::numeric_limits<i64>::max();
// practical allocation caps; arithmetic itself is checked to 2^63
constexpr i64 kMaxResidues = i64(1) << 26;
constexpr i64 kMaxOrderCache = i64(1) << 31;

} // namespace

std::vector<i64> apery_distances(const std::vector<i64>& gens, i64 a) {
    if (a <= 0) throw std::invalid_argument("modulus must be positive");
    if (a > kMaxResidues)
        throw std::length_error("modulus too large for an Apery computation");
    std::vector<i64> dist((size_t)a, kInf);
    dist[0] = 0;
    using Node = std::pair<i64, i64>; // (distance, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [dv, v] = pq.top();
        pq.pop();
        if (dv != dist[(size_t)v]) continue;
        for (i64 g : gens) {
            if (g % a == 0) continue; // residue-preserving steps never help
            i64 nd = checked_add(dv, g);
            i64 nv = (v + g % a) % a;
            if (nd < dist[(size_t)nv]) {
                dist[(size_t)nv] = nd;
                pq.push({nd, nv});
            }
        }
    }
    return dist;
}

namespace {

// is x representable as a nonnegative combination of gens (gens nonempty)?
bool representable(const std::vector<i64>& gens, i64 x) {
    if (x < 0) return false;
    if (x == 0) return true;
    i64 base = *std::min_element(gens.begin(), gens.end());
    std::vector<i64> dist = apery_distances(gens, base);
    i64 d = dist[(size_t)(x % base)];
    return d != kInf && x >= d;
}

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<i64> generators)
    : gens_(std::move(generators)) {
    if (gens_.empty())
        throw std::invalid_argument("generator list is empty");
    for (i64 g : gens_)
        if (g <= 0)
            throw std::invalid_argument("generators must be positive");
    std::sort(gens_.begin(), gens_.end());

    i64 g = 0;
    for (i64 x : gens_) g = std::gcd(g, x);
    if (g != 1) throw GcdNotOne(g);

    // minimality: no generator may lie in the semigroup of the others
    // (duplicates are caught here too)
    for (size_t i = 0; i < gens_.size(); ++i) {
        std::vector<i64> others;
        others.reserve(gens_.size() - 1);
        for (size_t j = 0; j < gens_.size(); ++j)
            if (j != i) others.push_back(gens_[j]);
        if (others.empty()) continue; // single generator, necessarily 1
        if (representable(others, gens_[i])) throw NotMinimal(gens_[i]);
    }

    apmin_ = apery_distances(gens_, gens_.front());
    cache_ = std::make_shared<OrderCache>();
}

bool NumericalSemigroup::contains(i64 x) const {
    if (x < 0) return false;
    i64 a = multiplicity();
    i64 d = apmin_[(size_t)(x % a)];
    return d != kInf && x >= d;
}

i64 NumericalSemigroup::frobenius() const {
    if (multiplicity() == 1) return -1; // full semigroup
    i64 mx = *std::max_element(apmin_.begin(), apmin_.end());
    return mx - multiplicity();
}

std::vector<i64> NumericalSemigroup::apery_set(i64 a) const {
    if (a <= 0 || !contains(a)) throw NotAMember(a);
    std::vector<i64> dist = apery_distances(gens_, a);
    std::sort(dist.begin(), dist.end());
    return dist;
}

void NumericalSemigroup::ensure_order_cache(i64 bound) const {
    if (bound >= kMaxOrderCache)
        throw std::length_error("order cache bound exceeds supported size");
    auto& c = *cache_;
    if ((i64)c.ord.size() > bound) return;
    size_t old = c.ord.size();
    c.ord.resize((size_t)bound + 1, -1);
    c.minlen.resize((size_t)bound + 1, -1);
    for (i64 x = (i64)old; x <= bound; ++x) {
        if (!contains(x)) continue;
        if (x == 0) {
            c.ord[(size_t)x] = 0;
            c.minlen[(size_t)x] = 0;
            continue;
        }
        int best = -1, least = -1;
        for (i64 gen : gens_) {
            if (gen > x) break; // sorted
            int o = c.ord[(size_t)(x - gen)];
            if (o < 0) continue;
            if (o + 1 > best) best = o + 1;
            int m = c.minlen[(size_t)(x - gen)];
            if (least < 0 || m + 1 < least) least = m + 1;
        }
        // a member > 0 always has a generator whose removal stays inside
        c.ord[(size_t)x] = best;
        c.minlen[(size_t)x] = least;
    }
}

i64 NumericalSemigroup::order(i64 x) const {
    if (!contains(x)) throw NotAMember(x);
    if (multiplicity() == 1) return x; // every step has weight 1
    std::lock_guard<std::mutex> lock(cache_->mtx);
    ensure_order_cache(x);
    return cache_->ord[(size_t)x];
}

i64 NumericalSemigroup::min_length(i64 x) const {
    if (!contains(x)) throw NotAMember(x);
    if (multiplicity() == 1) return x;
    std::lock_guard<std::mutex> lock(cache_->mtx);
    ensure_order_cache(x);
    return cache_->minlen[(size_t)x];
}

std::vector<Factorization> NumericalSemigroup::factorizations(i64 x) const {
    if (x < 0) throw std::invalid_argument("factorizations need x >= 0");
    std::vector<Factorization> out;
    if (!contains(x)) return out;
    size_t e = gens_.size();
    std::vector<i64> expo(e, 0);
    // depth-first over exponents, smaller exponent first => lexicographic
    auto rec = [&](auto&& self, size_t idx, i64 rem) -> void {
        if (idx + 1 == e) {
            if (rem % gens_[idx] == 0) {
                expo[idx] = rem / gens_[idx];
                i64 len = 0;
                for (i64 c : expo) len = checked_add(len, c);
                out.push_back({expo, x, len});
                expo[idx] = 0;
            }
            return;
        }
        for (i64 c = 0; checked_mul(c, gens_[idx]) <= rem; ++c) {
            expo[idx] = c;
            self(self, idx + 1, rem - c * gens_[idx]);
        }
        expo[idx] = 0;
    };
    rec(rec, 0, x);
    return out;
}

std::vector<i64> NumericalSemigroup::length_set(i64 x) const {
    if (!contains(x)) throw NotAMember(x);
    if (multiplicity() == 1) return {x};
    // bottom-up over members <= x; sets stay small (within [minlen, order])
    std::map<i64, std::set<i64>> ls;
    ls[0] = {0};
    for (i64 v = multiplicity(); v <= x; ++v) {
        if (!contains(v)) continue;
        std::set<i64>& cur = ls[v];
        for (i64 g : gens_) {
            if (g > v) break;
            auto it = ls.find(v - g);
            if (it == ls.end()) continue;
            for (i64 l : it->second) cur.insert(l + 1);
        }
    }
    const std::set<i64>& res = ls[x];
    return std::vector<i64>(res.begin(), res.end());
}

ElementProfile NumericalSemigroup::element_profile(i64 x) const {
    return {x, order(x), length_set(x)};
}

bool NumericalSemigroup::is_homogeneous() const {
    for (i64 w : apmin_) {
        if (w == 0) continue;
        if (min_length(w) != order(w)) return false;
    }
    return true;
}

bool NumericalSemigroup::is_symmetric() const {
    i64 f = frobenius();
    for (i64 x = 0; x <= f; ++x)
        if (contains(x) == contains(f - x)) return false;
    return true;
}

} // namespace nsg
