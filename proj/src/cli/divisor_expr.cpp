#include "cuspgroup/divisor_expr.hpp"

#include <cctype>
#include <map>

namespace cuspgroup {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

    DivisorExpr parse()
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '0') {
            std::size_t save = pos_++;
            skip_space();
            if (pos_ == text_.size())
                return {};
            pos_ = save;
        }
        int sign = 1;
        if (peek_sign(sign))
            ++pos_;
        term(sign);
        while (true) {
            skip_space();
            if (pos_ == text_.size())
                break;
            if (!peek_sign(sign))
                fail("expected '+' or '-'");
            ++pos_;
            term(sign);
        }
        DivisorExpr out;
        for (const auto& [key, c] : collected_)
            if (c != 0)
                out.terms.push_back({c, key.first, key.second});
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw MathError(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_sign(int& sign)
    {
        skip_space();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            return true;
        }
        sign = 1;
        return false;
    }

    std::string digits()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    void term(int sign)
    {
        skip_space();
        Integer coeff = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = Integer(digits());
            skip_space();
            if (pos_ == text_.size() || text_[pos_] != '*')
                fail("expected '*'");
            ++pos_;
            skip_space();
        }
        if (pos_ == text_.size() || (text_[pos_] != 'P' && text_[pos_] != 'Q'))
            fail("expected cusp 'P' or 'Q'");
        const CuspKind kind = text_[pos_] == 'P' ? CuspKind::P : CuspKind::Q;
        ++pos_;
        const std::size_t at = pos_;
        const std::string idx = digits();
        if (idx.size() > 18 || std::stoull(idx) >= n_)
            throw MathError(ErrorKind::IndexOutOfRange, "cusp index " + idx + " at offset " + std::to_string(at) +
                                                            " is not below n = " + std::to_string(n_));
        collected_[{kind, static_cast<std::size_t>(std::stoull(idx))}] += sign * coeff;
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
    std::map<std::pair<CuspKind, std::size_t>, Integer> collected_;
};

} // namespace

DivisorExpr parse_divisor(std::string_view text, std::size_t n) { return Parser(text, n).parse(); }

std::string format_divisor(const DivisorExpr& expr)
{
    if (expr.terms.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < expr.terms.size(); ++k) {
        const auto& t = expr.terms[k];
        const bool negative = t.coefficient < 0;
        if (k == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Integer mag = abs(t.coefficient);
        if (mag != 1)
            out += mag.get_str() + "*";
        out += t.cusp == CuspKind::P ? 'P' : 'Q';
        out += std::to_string(t.index);
    }
    return out;
}

CuspDivisor to_cusp_divisor(const DivisorExpr& expr, std::size_t n)
{
    auto d = CuspDivisor::zero(n);
    for (const auto& t : expr.terms) {
        if (t.index >= n)
            throw MathError(ErrorKind::IndexOutOfRange, "cusp index " + std::to_string(t.index) + " is not below n");
        (t.cusp == CuspKind::P ? d.p : d.q)[t.index] += t.coefficient;
    }
    return d;
}

DivisorExpr to_expr(const CuspDivisor& d)
{
    if (!d.is_integral())
        throw MathError(ErrorKind::NonIntegerEntry, "divisor has a non-integral coefficient");
    DivisorExpr out;
    for (std::size_t i = 0; i < d.p.size(); ++i)
        if (d.p[i] != 0)
            out.terms.push_back({d.p[i].get_num(), CuspKind::P, i});
    for (std::size_t i = 0; i < d.q.size(); ++i)
        if (d.q[i] != 0)
            out.terms.push_back({d.q[i].get_num(), CuspKind::Q, i});
    return out;
}

} // namespace cuspgroup
