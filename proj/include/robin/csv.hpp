#ifndef ROBIN_CSV_HPP
#define ROBIN_CSV_HPP

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace robin
{

/// 17 significant digits so that doubles round-trip; inf and nan as lowercase literals.
inline std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using CsvField = std::variant<double, long, std::string>;

class CsvWriter
{
public:
    explicit CsvWriter(std::ostream &os) : os_(os) {}

    void header(const std::vector<std::string> &names)
    {
        std::vector<CsvField> f(names.begin(), names.end());
        row(f);
    }

    void row(const std::vector<CsvField> &fields)
    {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) {
                os_ << ',';
            }
            os_ << render(fields[i]);
        }
        os_ << '\n';
    }

    void flush() { os_.flush(); }

private:
    static std::string render(const CsvField &f)
    {
        if (const auto *d = std::get_if<double>(&f)) {
            return format_double(*d);
        }
        if (const auto *l = std::get_if<long>(&f)) {
            return std::to_string(*l);
        }
        const auto &s = std::get<std::string>(f);
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') {
                q += '"';
            }
            q += c;
        }
        return q + '"';
    }

    std::ostream &os_;
};

} // namespace robin

#endif
