#include "spg/value.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace spg {

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::N: return "N";
    case Outcome::P: return "P";
    case Outcome::L: return "L";
    case Outcome::R: return "R";
    }
    return "?";
}

namespace {

Dyadic reduce(Dyadic d)
{
    while (d.exp > 0 && d.num % 2 == 0) {
        d.num /= 2;
        --d.exp;
    }
    return d;
}

Dyadic midpoint(Dyadic a, Dyadic b)
{
    const int e = std::max(a.exp, b.exp);
    const long long x = a.num << (e - a.exp);
    const long long y = b.num << (e - b.exp);
    return reduce({x + y, e + 1});
}

bool dyadic_less(Dyadic a, Dyadic b)
{
    const int e = std::max(a.exp, b.exp);
    return (a.num << (e - a.exp)) < (b.num << (e - b.exp));
}

using Ids = std::vector<std::uint32_t>;

} // namespace

std::string to_string(const Dyadic& d)
{
    if (d.exp == 0) {
        return std::to_string(d.num);
    }
    return std::to_string(d.num) + "/" + std::to_string(1LL << d.exp);
}

class ValueStore {
public:
    static ValueStore& instance()
    {
        static ValueStore store;
        return store;
    }

    Ids left(std::uint32_t g)
    {
        std::lock_guard lock(mutex_);
        return nodes_[g].first;
    }

    Ids right(std::uint32_t g)
    {
        std::lock_guard lock(mutex_);
        return nodes_[g].second;
    }

    bool leq(std::uint32_t a, std::uint32_t b)
    {
        std::lock_guard lock(mutex_);
        const std::uint64_t key = (std::uint64_t{a} << 32) | b;
        if (auto it = leq_memo_.find(key); it != leq_memo_.end()) {
            return it->second;
        }
        bool result = true;
        for (auto al : Ids(nodes_[a].first)) {
            if (leq(b, al)) {
                result = false;
                break;
            }
        }
        if (result) {
            for (auto br : Ids(nodes_[b].second)) {
                if (leq(br, a)) {
                    result = false;
                    break;
                }
            }
        }
        leq_memo_.emplace(key, result);
        return result;
    }

    Value canonical(Ids left, Ids right)
    {
        std::lock_guard lock(mutex_);
        for (bool changed = true; changed;) {
            changed = false;
            normalize(left);
            normalize(right);
            left = undominated(left, true);
            right = undominated(right, false);
            // a Left option A is reversible through A^R <= G; replace it by A^RL
            for (std::size_t i = 0; i < left.size() && !changed; ++i) {
                for (auto ar : Ids(nodes_[left[i]].second)) {
                    if (leq_game_left(ar, left, right)) {
                        Ids repl = nodes_[ar].first;
                        left.erase(left.begin() + static_cast<long>(i));
                        left.insert(left.end(), repl.begin(), repl.end());
                        changed = true;
                        break;
                    }
                }
            }
            for (std::size_t i = 0; i < right.size() && !changed; ++i) {
                for (auto bl : Ids(nodes_[right[i]].first)) {
                    if (game_leq_right(left, right, bl)) {
                        Ids repl = nodes_[bl].second;
                        right.erase(right.begin() + static_cast<long>(i));
                        right.insert(right.end(), repl.begin(), repl.end());
                        changed = true;
                        break;
                    }
                }
            }
        }
        return intern(std::move(left), std::move(right));
    }

    Value sum(std::uint32_t a, std::uint32_t b)
    {
        if (a == 0) return Value(b);
        if (b == 0) return Value(a);
        std::lock_guard lock(mutex_);
        const std::uint64_t key = (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
        if (auto it = sum_memo_.find(key); it != sum_memo_.end()) {
            return Value(it->second);
        }
        Ids l;
        Ids r;
        for (auto x : Ids(nodes_[a].first)) l.push_back(sum(x, b).id());
        for (auto x : Ids(nodes_[b].first)) l.push_back(sum(a, x).id());
        for (auto x : Ids(nodes_[a].second)) r.push_back(sum(x, b).id());
        for (auto x : Ids(nodes_[b].second)) r.push_back(sum(a, x).id());
        const Value v = canonical(std::move(l), std::move(r));
        sum_memo_.emplace(key, v.id());
        return v;
    }

    Value negate(std::uint32_t a)
    {
        std::lock_guard lock(mutex_);
        if (auto it = neg_memo_.find(a); it != neg_memo_.end()) {
            return Value(it->second);
        }
        Ids l;
        Ids r;
        for (auto x : Ids(nodes_[a].second)) l.push_back(negate(x).id());
        for (auto x : Ids(nodes_[a].first)) r.push_back(negate(x).id());
        const Value v = canonical(std::move(l), std::move(r));
        neg_memo_.emplace(a, v.id());
        neg_memo_.emplace(v.id(), a);
        return v;
    }

private:
    ValueStore() { intern({}, {}); }

    static void normalize(Ids& ids)
    {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }

    Ids undominated(const Ids& opts, bool left_side)
    {
        Ids out;
        for (auto a : opts) {
            const bool dominated = std::any_of(opts.begin(), opts.end(), [&](std::uint32_t b) {
                return b != a && (left_side ? leq(a, b) : leq(b, a));
            });
            if (!dominated) {
                out.push_back(a);
            }
        }
        return out;
    }

    // x <= G for G = {gl | gr}
    bool leq_game_left(std::uint32_t x, const Ids& gl, const Ids& gr)
    {
        for (auto xl : Ids(nodes_[x].first)) {
            if (game_leq_right(gl, gr, xl)) {
                return false;
            }
        }
        for (auto r : gr) {
            if (leq(r, x)) {
                return false;
            }
        }
        return true;
    }

    // G <= x for G = {gl | gr}
    bool game_leq_right(const Ids& gl, const Ids& gr, std::uint32_t x)
    {
        for (auto l : gl) {
            if (leq(x, l)) {
                return false;
            }
        }
        for (auto xr : Ids(nodes_[x].second)) {
            if (leq_game_left(xr, gl, gr)) {
                return false;
            }
        }
        return true;
    }

    Value intern(Ids left, Ids right)
    {
        normalize(left);
        normalize(right);
        auto key = std::make_pair(std::move(left), std::move(right));
        if (auto it = index_.find(key); it != index_.end()) {
            return Value(it->second);
        }
        const auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(key);
        index_.emplace(std::move(key), id);
        return Value(id);
    }

    std::recursive_mutex mutex_;
    std::vector<std::pair<Ids, Ids>> nodes_;
    std::map<std::pair<Ids, Ids>, std::uint32_t> index_;
    std::unordered_map<std::uint64_t, bool> leq_memo_;
    std::unordered_map<std::uint64_t, std::uint32_t> sum_memo_;
    std::unordered_map<std::uint32_t, std::uint32_t> neg_memo_;
};

Value::Value() : id_(0)
{
    ValueStore::instance();
}

Value Value::from_options(const std::vector<Value>& left, const std::vector<Value>& right)
{
    Ids l;
    Ids r;
    for (auto v : left) l.push_back(v.id());
    for (auto v : right) r.push_back(v.id());
    return ValueStore::instance().canonical(std::move(l), std::move(r));
}

Value Value::integer(long long n)
{
    Value v;
    for (long long k = 0; k < n; ++k) {
        v = from_options({v}, {});
    }
    for (long long k = 0; k > n; --k) {
        v = from_options({}, {v});
    }
    return v;
}

Value Value::star(int n)
{
    std::vector<Value> opts;
    for (int k = 0; k < n; ++k) {
        opts.push_back(from_options(opts, opts));
    }
    return from_options(opts, opts);
}

std::vector<Value> Value::left_options() const
{
    std::vector<Value> out;
    for (auto id : ValueStore::instance().left(id_)) out.push_back(Value(id));
    return out;
}

std::vector<Value> Value::right_options() const
{
    std::vector<Value> out;
    for (auto id : ValueStore::instance().right(id_)) out.push_back(Value(id));
    return out;
}

bool leq(Value a, Value b)
{
    return ValueStore::instance().leq(a.id(), b.id());
}

Value operator+(Value a, Value b)
{
    return ValueStore::instance().sum(a.id(), b.id());
}

Value operator-(Value a)
{
    return ValueStore::instance().negate(a.id());
}

Outcome outcome_of(Value v)
{
    const Value zero;
    const bool ge = leq(zero, v);
    const bool le = leq(v, zero);
    if (ge && le) return Outcome::P;
    if (ge) return Outcome::L;
    if (le) return Outcome::R;
    return Outcome::N;
}

std::optional<Dyadic> number_value(Value v)
{
    const auto l = v.left_options();
    const auto r = v.right_options();
    if (l.empty() && r.empty()) {
        return Dyadic{};
    }
    if (l.size() > 1 || r.size() > 1) {
        return std::nullopt;
    }
    std::optional<Dyadic> x;
    std::optional<Dyadic> y;
    if (!l.empty() && !(x = number_value(l[0]))) return std::nullopt;
    if (!r.empty() && !(y = number_value(r[0]))) return std::nullopt;
    if (!y) {
        return x->exp == 0 && x->num >= 0 ? std::optional<Dyadic>(Dyadic{x->num + 1, 0}) : std::nullopt;
    }
    if (!x) {
        return y->exp == 0 && y->num <= 0 ? std::optional<Dyadic>(Dyadic{y->num - 1, 0}) : std::nullopt;
    }
    if (!dyadic_less(*x, *y)) {
        return std::nullopt;
    }
    return midpoint(*x, *y);
}

std::optional<int> nimber_value(Value v)
{
    auto l = v.left_options();
    const auto r = v.right_options();
    if (l != r) {
        return std::nullopt;
    }
    std::vector<int> ns;
    for (auto o : l) {
        auto n = nimber_value(o);
        if (!n) return std::nullopt;
        ns.push_back(*n);
    }
    std::sort(ns.begin(), ns.end());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] != static_cast<int>(i)) return std::nullopt;
    }
    return static_cast<int>(ns.size());
}

std::string to_string(Value v)
{
    if (auto d = number_value(v)) {
        return to_string(*d);
    }
    if (auto n = nimber_value(v)) {
        return *n == 1 ? "*" : "*" + std::to_string(*n);
    }
    const auto l = v.left_options();
    const auto r = v.right_options();
    if (l.size() == 1 && r.size() == 1) {
        const auto x = number_value(l[0]);
        const auto y = number_value(r[0]);
        if (x && y && *x == *y) {
            return to_string(*x) + "*";
        }
        if (x && y && r[0] == -l[0]) {
            return "±" + to_string(*x);
        }
    }
    std::string out = "{";
    for (std::size_t i = 0; i < l.size(); ++i) {
        out += (i ? "," : "") + to_string(l[i]);
    }
    out += "|";
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += (i ? "," : "") + to_string(r[i]);
    }
    return out + "}";
}

} // namespace spg
