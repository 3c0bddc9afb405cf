#include "lungkb/util.hpp"

#include "lungkb/errors.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lungkb {

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string collapse_whitespace(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string format_decimal(double value) {
    // Shortest representation that round-trips, probing increasing precision.
    for (int precision = 1; precision <= 17; ++precision) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == value) {
            std::string s(buf);
            if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
                s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
                s += ".0";
            }
            return s;
        }
    }
    return std::to_string(value);
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string(buf);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("read failed: " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << contents;
    if (!out) throw IoFailure("write failed: " + path);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::string all = read_file(path);
    std::vector<std::string> lines;
    std::string cur;
    for (char c : all) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

namespace {

const std::array<std::string, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

std::optional<int> month_from_name(const std::string& name) {
    std::string n = to_lower(name);
    for (std::size_t i = 0; i < kMonths.size(); ++i) {
        if (n == kMonths[i] || (n.size() == 3 && kMonths[i].compare(0, 3, n) == 0)) {
            return static_cast<int>(i) + 1;
        }
    }
    return std::nullopt;
}

bool plausible_date(int y, int m, int d) {
    return y >= 1 && y <= 9999 && m >= 1 && m <= 12 && d >= 1 && d <= 31;
}

std::string render_iso(int y, int m, int d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return std::string(buf);
}

} // namespace

std::optional<std::string> parse_date_iso(const std::string& raw) {
    std::string s = trim(raw);
    int y = 0, m = 0, d = 0;
    char extra = 0;

    if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &extra) == 3 &&
        plausible_date(y, m, d) && s.size() >= 8) {
        return render_iso(y, m, d);
    }
    if (std::sscanf(s.c_str(), "%d/%d/%d%c", &m, &d, &y, &extra) == 3) {
        // US convention MM/DD/YYYY; a leading 4-digit field means YYYY/MM/DD.
        if (m > 1000) {
            int yy = m, mm = d, dd = y;
            y = yy;
            m = mm;
            d = dd;
        }
        if (plausible_date(y, m, d)) return render_iso(y, m, d);
    }

    // "March 5, 2021" / "Mar 5 2021"
    char month_name[32] = {0};
    if (std::sscanf(s.c_str(), "%31[A-Za-z] %d , %d", month_name, &d, &y) == 3 ||
        std::sscanf(s.c_str(), "%31[A-Za-z] %d, %d", month_name, &d, &y) == 3 ||
        std::sscanf(s.c_str(), "%31[A-Za-z] %d %d", month_name, &d, &y) == 3) {
        auto mo = month_from_name(trim(month_name));
        if (mo && plausible_date(y, *mo, d)) return render_iso(y, *mo, d);
    }
    return std::nullopt;
}

} // namespace lungkb
