#include <mdstab/errors.hh>
#include <mdstab/rational.hh>

#include <charconv>
#include <limits>

namespace mdstab
{
    namespace
    {
        auto parse_int(std::string_view text, std::size_t offset) -> std::int64_t
        {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw ParseError("expected an integer", offset);
            return value;
        }
    }

    auto to_string(const Rational & q) -> std::string
    {
        if (q.denominator() == 1)
            return std::to_string(q.numerator());
        return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
    }

    auto to_double(const Rational & q) -> double
    {
        return boost::rational_cast<double>(q);
    }

    auto parse_rational(const std::string & text) -> Rational
    {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            auto num = parse_int(std::string_view(text).substr(0, slash), 0);
            auto den = parse_int(std::string_view(text).substr(slash + 1), slash + 1);
            if (den == 0)
                throw ParseError("zero denominator", slash + 1);
            return {num, den};
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string_view whole = std::string_view(text).substr(0, dot);
            std::string_view frac = std::string_view(text).substr(dot + 1);
            if (frac.size() > 15)
                throw ParseError("too many decimal places", dot + 1);
            bool negative = ! whole.empty() && whole.front() == '-';
            if (negative)
                whole.remove_prefix(1);
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
            std::int64_t w = whole.empty() ? 0 : parse_int(whole, negative ? 1 : 0);
            std::int64_t f = frac.empty() ? 0 : parse_int(frac, dot + 1);
            Rational q(w * scale + f, scale);
            return negative ? -q : q;
        }
        return {parse_int(text, 0), 1};
    }

    auto less_than_scaled(std::int64_t lhs, const Rational & q, std::int64_t rhs) -> bool
    {
        // lhs < (p / d) * rhs  <=>  lhs * d < p * rhs, d > 0
        return static_cast<__int128>(lhs) * q.denominator() < static_cast<__int128>(q.numerator()) * rhs;
    }

    auto greater_than_scaled(std::int64_t lhs, const Rational & q, std::int64_t rhs) -> bool
    {
        return static_cast<__int128>(lhs) * q.denominator() > static_cast<__int128>(q.numerator()) * rhs;
    }
}
