#pragma once

#include <memory>
#include <string>

namespace reglab {

// Integer expression in n: + - * / (floor division) ^, sqrt(...) (floor
// square root), parentheses and integer literals.
class GrowthExpr {
public:
    GrowthExpr() = default;
    static GrowthExpr parse(const std::string& text);

    long long operator()(long long n) const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

}  // namespace reglab
