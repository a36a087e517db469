#include "authornet/timeparse.hpp"

#include <cctype>

namespace authornet {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static const int d[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return d[m - 1];
}

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

int year_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return y + (m <= 2);
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    // Fixed-width unsigned integer field.
    bool digits(int width, int& out) {
        if (pos + width > s.size()) return false;
        int v = 0;
        for (int i = 0; i < width; ++i) {
            char c = s[pos + i];
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            v = v * 10 + (c - '0');
        }
        pos += width;
        out = v;
        return true;
    }
};

}  // namespace

int utc_year(std::int64_t epoch_s) {
    std::int64_t days = epoch_s / 86400;
    if (epoch_s % 86400 < 0) --days;
    return year_from_days(days);
}

std::optional<Timestamp> parse_iso8601(std::string_view text) {
    Cursor c{text};
    int y, mo, d;
    if (!c.digits(4, y) || !c.eat('-') || !c.digits(2, mo) || !c.eat('-') || !c.digits(2, d))
        return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > days_in_month(y, mo)) return std::nullopt;

    int hh = 0, mi = 0, ss = 0;
    if (!c.done() && (c.peek() == 'T' || c.peek() == 't' || c.peek() == ' ')) {
        ++c.pos;
        if (!c.digits(2, hh) || !c.eat(':') || !c.digits(2, mi)) return std::nullopt;
        if (c.eat(':')) {
            if (!c.digits(2, ss)) return std::nullopt;
            if (c.eat('.')) {
                bool any = false;
                while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
                    ++c.pos;
                    any = true;
                }
                if (!any) return std::nullopt;
            }
        }
        if (hh > 23 || mi > 59 || ss > 60) return std::nullopt;
        if (ss == 60) ss = 59;  // clamp leap seconds
    }

    std::int64_t offset = 0;
    if (!c.done()) {
        char z = c.peek();
        if (z == 'Z' || z == 'z') {
            ++c.pos;
        } else if (z == '+' || z == '-') {
            ++c.pos;
            int oh, om = 0;
            if (!c.digits(2, oh)) return std::nullopt;
            if (c.eat(':')) {
                if (!c.digits(2, om)) return std::nullopt;
            } else if (!c.done()) {
                if (!c.digits(2, om)) return std::nullopt;
            }
            if (oh > 23 || om > 59) return std::nullopt;
            offset = (z == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
        } else {
            return std::nullopt;
        }
    }
    if (!c.done()) return std::nullopt;

    std::int64_t epoch = days_from_civil(y, mo, d) * 86400 + hh * 3600LL + mi * 60LL + ss - offset;
    return Timestamp{epoch, utc_year(epoch)};
}

}  // namespace authornet
