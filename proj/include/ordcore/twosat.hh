/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_TWOSAT_HH
#define ORDCORE_GUARD_TWOSAT_HH 1

#include <optional>
#include <ostream>
#include <vector>

namespace ordcore
{
    struct Literal
    {
        int variable;
        bool positive;

        [[nodiscard]] auto operator!() const -> Literal { return Literal{ variable, ! positive }; }
        auto operator==(const Literal &) const -> bool = default;
    };

    inline auto pos(int variable) -> Literal { return Literal{ variable, true }; }
    inline auto neg(int variable) -> Literal { return Literal{ variable, false }; }

    /// A clause of width at most two; a unit clause is written (l, l).
    struct Clause
    {
        Literal first, second;

        auto operator==(const Clause &) const -> bool = default;
    };

    class TwoSatInstance
    {
    private:
        int _var_count = 0;
        std::vector<Clause> _clauses;

    public:
        TwoSatInstance() = default;
        explicit TwoSatInstance(int var_count);

        auto add_variable() -> int;
        auto add_clause(Literal a, Literal b) -> void;
        auto add_unit(Literal a) -> void { add_clause(a, a); }

        [[nodiscard]] auto var_count() const noexcept -> int { return _var_count; }
        [[nodiscard]] auto clauses() const noexcept -> const std::vector<Clause> & { return _clauses; }
    };

    using Assignment = std::vector<bool>;

    /// Implication graph plus strongly connected components. Deterministic for
    /// a fixed clause order.
    auto solve(const TwoSatInstance & instance) -> std::optional<Assignment>;

    /// True iff every clause has a true literal. Throws on a length mismatch.
    auto check(const TwoSatInstance & instance, const Assignment & assignment) -> bool;

    /// DIMACS CNF text, variables 1-based.
    auto write_dimacs(std::ostream & out, const TwoSatInstance & instance) -> void;
}

#endif
