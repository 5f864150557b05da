#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spg {

/// Normal-play outcome class.
enum class Outcome { N, P, L, R };

std::string to_string(Outcome o);

/// m / 2^exp.
struct Dyadic {
    long long num = 0;
    int exp = 0;

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

std::string to_string(const Dyadic& d);

/// A short game in canonical form.
///
/// Values are handles into a process-wide hash-consed store of canonical
/// forms, so two values are equal as games exactly when their ids agree.
/// The store is guarded by a mutex; values may be shared across threads.
class Value {
public:
    /// The zero game { | }.
    Value();

    /// Canonicalizes {left | right}: removes dominated options and bypasses
    /// reversible ones until neither applies.
    static Value from_options(const std::vector<Value>& left, const std::vector<Value>& right);
    static Value integer(long long n);
    static Value star(int n = 1);

    std::vector<Value> left_options() const;
    std::vector<Value> right_options() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(Value a, Value b) { return a.id_ == b.id_; }

private:
    explicit Value(std::uint32_t id) : id_(id) {}
    friend class ValueStore;

    std::uint32_t id_;
};

/// a <= b in the normal-play partial order.
bool leq(Value a, Value b);
inline bool fuzzy(Value a, Value b) { return !leq(a, b) && !leq(b, a); }

Value operator+(Value a, Value b);
Value operator-(Value a);

Outcome outcome_of(Value v);

/// The dyadic number this value equals, if it is a number.
std::optional<Dyadic> number_value(Value v);
/// n if the value is the nimber *n.
std::optional<int> nimber_value(Value v);

/// Integers and dyadics as numbers, "*" and "*n" for nimbers, "x*" for a number
/// plus star, "±x" for symmetric switches, otherwise "{a,b|c}".
std::string to_string(Value v);

} // namespace spg
