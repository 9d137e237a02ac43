#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linord/term.hpp"

namespace linord {

enum class Tri { False, True, Unknown };

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::True && b == Tri::True) return Tri::True;
    return Tri::Unknown;
}
inline Tri tri_not(Tri a) {
    if (a == Tri::Unknown) return a;
    return a == Tri::True ? Tri::False : Tri::True;
}

// Piece of a convex partition: a block maps onto a convex interval of the target;
// a fan is an omega- or omega*-indexed run of singleton pieces.
struct Piece {
    enum class Kind { Block, Fan };
    Kind kind = Kind::Block;
    std::string src;       // where the piece sits in the source
    std::string dst;       // where its image sits in the target
    std::string src_type;  // order type of the piece (term syntax)
    std::string dst_type;  // order type of the image (term syntax); fans: the index contribution
};

enum class Shape { Whole, Min, Max };

// The family (K'_k) of a ccs violation.
struct CcsFamily {
    enum class Kind {
        Finite,     // K and K' finite, explicit spans
        Endpoint,   // pieces equal `rest` except at min/max of K
        Blockwise,  // K = M*w, K' = N*w; within block i: first index -> first_shape of N_i, rest -> rest
    };
    Kind kind = Kind::Finite;
    Term inner;                                                // K'
    std::vector<std::pair<std::uint64_t, std::uint64_t>> spans;  // Finite: [lo, hi], 0-based
    std::optional<Shape> first;
    std::optional<Shape> last;
    Shape rest = Shape::Min;
};

struct Witness {
    Term index_order;  // K
    std::vector<Piece> pieces;
    std::optional<std::vector<std::int64_t>> embedding;  // finite instances: image of each source point
    std::optional<CcsFamily> family;                     // ccs violations only
    std::optional<Term> sum;                             // ccs violations only
};

struct Verdict {
    enum class Status { Holds, Fails, Unknown };
    Status status = Status::Unknown;
    std::string rule;
    std::string message;
    std::optional<Witness> witness;

    static Verdict holds(std::string rule, std::string msg, std::optional<Witness> w = std::nullopt) {
        return {Status::Holds, std::move(rule), std::move(msg), std::move(w)};
    }
    static Verdict fails(std::string rule, std::string msg, std::optional<Witness> w = std::nullopt) {
        return {Status::Fails, std::move(rule), std::move(msg), std::move(w)};
    }
    static Verdict unknown(std::string rule, std::string msg) {
        return {Status::Unknown, std::move(rule), std::move(msg), std::nullopt};
    }

    bool is_holds() const noexcept { return status == Status::Holds; }
    bool is_fails() const noexcept { return status == Status::Fails; }
    bool is_unknown() const noexcept { return status == Status::Unknown; }
    bool decided() const noexcept { return status != Status::Unknown; }
    Tri tri() const noexcept {
        return is_holds() ? Tri::True : is_fails() ? Tri::False : Tri::Unknown;
    }
};

inline const char* status_name(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Holds: return "Holds";
        case Verdict::Status::Fails: return "Fails";
        default: return "Unknown";
    }
}

}  // namespace linord
