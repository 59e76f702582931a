#pragma once

// Priority functions as expression trees over shop-floor features.
//
// A tree is stored as a flat prefix sequence of symbols. The subtree rooted at
// position i occupies [i, subtree_end(i)), which makes subtree extraction and
// replacement a pair of vector splices. Trees are immutable once built.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfjss {

enum class Symbol : std::uint8_t {
    // functions (arity 2)
    Add, Sub, Mul, Div, Max, Min,
    // terminals
    PT, W, WIQ, NIQ, MWT, OWT, NPT, WKR, NOR, TIS, SLACK, NJB,
};

inline constexpr int kNumFunctions = 6;
inline constexpr int kNumTerminals = 12;
inline constexpr int kNumSymbols = kNumFunctions + kNumTerminals;
inline constexpr int kMaxTreeDepth = 8;

constexpr bool is_function(Symbol s) { return static_cast<int>(s) < kNumFunctions; }
constexpr bool is_terminal(Symbol s) { return !is_function(s); }
constexpr int terminal_index(Symbol s) { return static_cast<int>(s) - kNumFunctions; }
constexpr Symbol function_symbol(int i) { return static_cast<Symbol>(i); }
constexpr Symbol terminal_symbol(int i) { return static_cast<Symbol>(kNumFunctions + i); }

std::string_view symbol_name(Symbol s);
std::optional<Symbol> parse_symbol(std::string_view name);

// Feature values for one candidate at one decision point.
class DecisionContext {
public:
    void set(Symbol terminal, double value) {
        const int i = terminal_index(terminal);
        values_[i] = value;
        present_ |= static_cast<std::uint16_t>(1u << i);
    }
    bool has(Symbol terminal) const { return (present_ >> terminal_index(terminal)) & 1u; }
    double get(Symbol terminal) const;  // throws std::out_of_range("unknown terminal: X")

    double operator[](Symbol terminal) const { return values_[terminal_index(terminal)]; }

private:
    std::array<double, kNumTerminals> values_{};
    std::uint16_t present_ = 0;
};

class ExprTree {
public:
    ExprTree() = default;
    // Throws std::invalid_argument if `nodes` is not a well-formed prefix sequence.
    explicit ExprTree(std::vector<Symbol> nodes);

    static ExprTree terminal(Symbol s) { return ExprTree({s}); }
    // Parses the parenthesised prefix form, e.g. "(+ WIQ (* NIQ PT))".
    static ExprTree parse(std::string_view text);

    std::string to_string() const;

    std::span<const Symbol> nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    int depth() const { return depth_; }
    bool empty() const { return nodes_.empty(); }

    // One past the last node of the subtree rooted at `i`.
    std::size_t subtree_end(std::size_t i) const;
    // Level of node `i` (root = 0).
    int level_of(std::size_t i) const;
    ExprTree subtree(std::size_t i) const;
    // Copy of this tree with the subtree at `i` replaced by `replacement`.
    ExprTree with_subtree(std::size_t i, const ExprTree& replacement) const;

    friend bool operator==(const ExprTree& a, const ExprTree& b) { return a.nodes_ == b.nodes_; }

private:
    std::vector<Symbol> nodes_;
    int depth_ = 0;
};

struct RulePair {
    ExprTree sequencing;
    ExprTree routing;

    friend bool operator==(const RulePair&, const RulePair&) = default;
};

// "<sequencing> | <routing>" in prefix form; parse_rule_pair accepts the same.
std::string to_string(const RulePair& pair);
RulePair parse_rule_pair(std::string_view text);

int tree_depth(const ExprTree& tree);
std::size_t count_nodes(const ExprTree& tree);

// Protected division: x / 0 = 1.
inline double protected_div(double a, double b) { return b == 0.0 ? 1.0 : a / b; }

// Throws std::out_of_range("unknown terminal: X") if a terminal used by the
// tree has no value in `ctx`.
double eval_tree(const ExprTree& tree, const DecisionContext& ctx);

// Index of the minimum-priority candidate. Candidates must be presented in
// tie-break order: equal priorities resolve to the earliest. NaN ranks last;
// if every priority is NaN the first candidate wins. Throws on empty input.
std::size_t select_min(std::span<const double> priorities);

// As above, with an explicit tie-break key per candidate (smaller key wins).
template <class Key>
std::size_t select_min(std::span<const double> priorities, std::span<const Key> keys) {
    if (priorities.empty()) throw std::invalid_argument("select_min: no candidates");
    if (priorities.size() != keys.size()) throw std::invalid_argument("select_min: key count mismatch");
    std::size_t best = 0;
    for (std::size_t i = 1; i < priorities.size(); ++i) {
        const double p = priorities[i];
        const double q = priorities[best];
        const bool p_nan = std::isnan(p);
        const bool q_nan = std::isnan(q);
        bool better;
        if (p_nan != q_nan) {
            better = q_nan;
        } else if (p_nan || p == q) {
            better = keys[i] < keys[best];
        } else {
            better = p < q;
        }
        if (better) best = i;
    }
    return best;
}

// Tie-break key for operations: (job arrival, job id, operation index).
struct OperationKey {
    double arrival;
    int job;
    int index;
    friend auto operator<=>(const OperationKey&, const OperationKey&) = default;
};

double baseline_spt(const DecisionContext& ctx);
double baseline_lwiq(const DecisionContext& ctx);
// SPT for sequencing and LWIQ for routing, as trees.
RulePair baseline_pair();

}  // namespace dfjss
