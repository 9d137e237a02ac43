#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "linord/ordinal.hpp"

namespace linord {

using Rational = boost::rational<std::int64_t>;

std::string rational_str(const Rational& q);

struct Node;

enum class TermKind { Fin, Omega, OmegaStar, Zeta, Shuffle, IShuffle, Sum, Product, Ord, ZPow, Rev, Indexed };

class TermError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Immutable syntax tree; copies share structure.
class Term {
public:
    static Term fin(std::uint64_t n);
    static Term omega();
    static Term omega_star();
    static Term zeta();
    static Term eta();  // shuffle of the single label 1
    static Term shuffle(class LabelSet labels);
    static Term ishuffle(const Rational& lo, const Rational& hi);
    static Term sum(std::vector<Term> parts);
    static Term product(const Term& left, const Term& right);
    static Term ord(const Ordinal& alpha);
    static Term zpow(const Ordinal& gamma);
    static Term rev(const Term& inner);
    static Term indexed(struct Indexed ix);

    TermKind kind() const noexcept;
    const Node& node() const noexcept { return *node_; }
    template <class T>
    const T& as() const;
    template <class T>
    bool is() const;

    std::string str() const;

    friend std::strong_ordering operator<=>(const Term& a, const Term& b);
    friend bool operator==(const Term& a, const Term& b);

private:
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Eventually periodic subset of {1, 2, 3, ...}: bit i stands for i + 1.
struct Periodic {
    std::vector<bool> prefix;
    std::vector<bool> period;
    friend bool operator==(const Periodic&, const Periodic&) = default;
};

class LabelSet {
public:
    // Labels are normalized, deduplicated and sorted; they must be scattered.
    static LabelSet of(std::vector<Term> labels);
    static LabelSet periodic(std::vector<bool> prefix, std::vector<bool> period);

    bool is_periodic() const noexcept { return std::holds_alternative<Periodic>(v_); }
    const std::vector<Term>& labels() const { return std::get<std::vector<Term>>(v_); }
    const Periodic& pattern() const { return std::get<Periodic>(v_); }
    bool contains_fin(std::uint64_t n) const;
    bool is_infinite() const noexcept { return is_periodic(); }
    std::string str() const;

    friend std::strong_ordering operator<=>(const LabelSet& a, const LabelSet& b);
    friend bool operator==(const LabelSet& a, const LabelSet& b);

private:
    explicit LabelSet(std::variant<std::vector<Term>, Periodic> v) : v_(std::move(v)) {}
    std::variant<std::vector<Term>, Periodic> v_;
};

struct FiniteChain {
    std::uint64_t n;
};
struct Omega {};
struct OmegaStar {};
struct Zeta {};
struct Shuffle {
    LabelSet labels;
};
struct IntervalShuffle {
    Rational lo, hi;
};
struct Sum {
    std::vector<Term> parts;
};
struct Product {
    Term left, right;
};
struct OrdTerm {
    Ordinal alpha;
};
struct ZPow {
    Ordinal gamma;
};
struct Rev {
    Term inner;
};

// Symbolic indexed sums built by the reduction maps; opaque to the general deciders.
enum class IndexedKind { Threshold, FinZeta, E1 };
struct Indexed {
    IndexedKind kind;
    std::optional<Term> arg;          // the order L plugged into the map
    Ordinal gamma;                    // Threshold
    std::vector<Rational> prefix;     // E1
    Rational tail;                    // E1
};

struct Node {
    std::variant<FiniteChain, Omega, OmegaStar, Zeta, Shuffle, IntervalShuffle, Sum, Product, OrdTerm, ZPow, Rev,
                 Indexed>
        v;
};

template <class T>
const T& Term::as() const {
    return std::get<T>(node_->v);
}
template <class T>
bool Term::is() const {
    return std::holds_alternative<T>(node_->v);
}

}  // namespace linord
