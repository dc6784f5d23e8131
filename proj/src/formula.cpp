#include "proofdiag/formula.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <tuple>

#include "proofdiag/errors.hpp"

namespace proofdiag {

struct Formula::Node {
    FormulaKind kind;
    std::string name;       // atoms
    const Node* left = nullptr;
    const Node* right = nullptr;
    std::string text;       // cached printed form
};

namespace {

// Intern pool. Nodes live for the lifetime of the process.
struct InternPool {
    std::mutex mutex;
    std::map<std::tuple<FormulaKind, std::string, const void*, const void*>, Formula::Node*> table;

    const Formula::Node* get(FormulaKind kind, std::string name,
                             const Formula::Node* l, const Formula::Node* r,
                             std::string text) {
        std::lock_guard<std::mutex> lock(mutex);
        auto key = std::make_tuple(kind, name, static_cast<const void*>(l),
                                   static_cast<const void*>(r));
        auto it = table.find(key);
        if (it != table.end())
            return it->second;
        auto* node = new Formula::Node{kind, std::move(name), l, r, std::move(text)};
        table.emplace(std::move(key), node);
        return node;
    }
};

InternPool& pool() {
    static InternPool p;
    return p;
}

bool valid_atom_name(std::string_view name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
        return false;
    if (name == "bot")
        return false;  // reserved unit keyword
    for (char c : name)
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

}  // namespace

Formula Formula::atom(std::string_view name) {
    if (!valid_atom_name(name))
        throw Error("invalid atom name: '" + std::string(name) + "'");
    std::string n(name);
    return Formula(pool().get(FormulaKind::Atom, n, nullptr, nullptr, n));
}

Formula Formula::dual_atom(std::string_view name) {
    if (!valid_atom_name(name))
        throw Error("invalid atom name: '" + std::string(name) + "'");
    std::string n(name);
    return Formula(pool().get(FormulaKind::DualAtom, n, nullptr, nullptr, n + "^"));
}

Formula Formula::tensor(Formula left, Formula right) {
    std::string text = "(" + left.text() + "*" + right.text() + ")";
    return Formula(pool().get(FormulaKind::Tensor, {}, left.node_, right.node_,
                              std::move(text)));
}

Formula Formula::par(Formula left, Formula right) {
    std::string text = "(" + left.text() + "@" + right.text() + ")";
    return Formula(pool().get(FormulaKind::Par, {}, left.node_, right.node_,
                              std::move(text)));
}

Formula Formula::one() {
    return Formula(pool().get(FormulaKind::One, {}, nullptr, nullptr, "1"));
}

Formula Formula::bot() {
    return Formula(pool().get(FormulaKind::Bot, {}, nullptr, nullptr, "bot"));
}

FormulaKind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
    return kind() == FormulaKind::Tensor || kind() == FormulaKind::Par;
}

const std::string& Formula::name() const { return node_->name; }

Formula Formula::left() const { return Formula(node_->left); }

Formula Formula::right() const { return Formula(node_->right); }

const std::string& Formula::text() const { return node_->text; }

bool Formula::operator<(const Formula& o) const {
    if (node_ == o.node_)
        return false;
    return text() < o.text();
}

Formula dual(Formula f) {
    switch (f.kind()) {
    case FormulaKind::Atom: return Formula::dual_atom(f.name());
    case FormulaKind::DualAtom: return Formula::atom(f.name());
    case FormulaKind::Tensor: return Formula::par(dual(f.right()), dual(f.left()));
    case FormulaKind::Par: return Formula::tensor(dual(f.right()), dual(f.left()));
    case FormulaKind::One: return Formula::bot();
    case FormulaKind::Bot: return Formula::one();
    }
    throw Error("unreachable formula kind");
}

namespace {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    Formula parse() {
        Formula f = expression();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("trailing input after formula", pos_);
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Formula expression() {
        Formula f = primary();
        while (peek() == '^') {
            ++pos_;
            f = dual(f);
        }
        return f;
    }

    Formula primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Formula l = expression();
            char op = peek();
            if (op != '*' && op != '@')
                throw ParseError("expected '*' or '@' in binary formula", pos_);
            ++pos_;
            Formula r = expression();
            Formula f = op == '*' ? Formula::tensor(l, r) : Formula::par(l, r);
            expect(')');
            return f;
        }
        if (c == '1') {
            ++pos_;
            return Formula::one();
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size()) {
                char k = text_[pos_];
                if (std::islower(static_cast<unsigned char>(k)) ||
                    std::isdigit(static_cast<unsigned char>(k)) || k == '_')
                    ++pos_;
                else
                    break;
            }
            std::string_view name = text_.substr(start, pos_ - start);
            if (name == "bot")
                return Formula::bot();
            return Formula::atom(name);
        }
        if (c == '\0')
            throw ParseError("unexpected end of formula", pos_);
        throw ParseError(std::string("unknown token '") + c + "'", pos_);
    }
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string print_formula(Formula f) { return f.text(); }

std::string print_sequent(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += s[i].text();
    }
    return out;
}

}  // namespace proofdiag
