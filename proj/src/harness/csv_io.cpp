#include "ifa/harness/csv_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

// Shortest representation that reads back to the same double.
void put(std::ostream& os, double x)
{
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    os.write(buf.data(), end - buf.data());
}

template <std::size_t N>
void put_row(std::ostream& os, const std::array<double, N>& v)
{
    for (std::size_t i = 0; i < N; ++i) {
        if (i != 0) {
            os << ',';
        }
        put(os, v[i]);
    }
    os << '\n';
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

template <std::size_t N>
std::array<double, N> parse_fields(std::string_view line, std::size_t lineno)
{
    std::array<double, N> out{};
    std::size_t n = 0;
    while (true) {
        const auto comma = line.find(',');
        const auto field = trim(line.substr(0, comma));
        if (n == N) {
            throw FormatError("expected " + std::to_string(N) + " fields", lineno);
        }
        const char* first = field.data();
        const char* last = field.data() + field.size();
        if (!field.empty() && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, out[n]);
        if (field.empty() || ec != std::errc() || ptr != last) {
            throw FormatError("bad number '" + std::string(field) + "'", lineno);
        }
        ++n;
        if (comma == std::string_view::npos) {
            break;
        }
        line.remove_prefix(comma + 1);
    }
    if (n != N) {
        throw FormatError("expected " + std::to_string(N) + " fields, got " + std::to_string(n),
                          lineno);
    }
    return out;
}

// Calls f(fields, lineno) for every non-blank data row after the header.
template <std::size_t N, class F>
void read_rows(std::istream& is, std::string_view header, F&& f)
{
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        const auto s = trim(line);
        if (s.empty()) {
            continue;
        }
        if (!have_header) {
            if (s != header) {
                throw FormatError("expected header '" + std::string(header) + "'", lineno);
            }
            have_header = true;
            continue;
        }
        f(parse_fields<N>(s, lineno), lineno);
    }
    if (!have_header) {
        throw FormatError("missing header '" + std::string(header) + "'", lineno + 1);
    }
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream os(path);
    if (!os) {
        throw Error("cannot open " + path + " for writing");
    }
    return os;
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream is(path);
    if (!is) {
        throw Error("cannot open " + path);
    }
    return is;
}

}  // namespace

std::vector<ImuSample> imu_samples(const std::vector<ImuInterval>& imu, double interval, double t0)
{
    std::vector<ImuSample> out;
    out.reserve(2 * imu.size());
    for (std::size_t k = 0; k < imu.size(); ++k) {
        const double tk = t0 + static_cast<double>(k) * interval;
        out.push_back({tk + 0.5 * interval, imu[k].dtheta1, imu[k].dv1});
        out.push_back({t0 + static_cast<double>(k + 1) * interval, imu[k].dtheta2, imu[k].dv2});
    }
    return out;
}

TruthRow truth_row(const TruthSample& s)
{
    return {s.t, dcm_to_quat(s.body_to_nav.transpose()), s.v, s.p};
}

void write_imu_csv(std::ostream& os, const std::vector<ImuSample>& rows)
{
    os << kImuHeader << '\n';
    for (const auto& r : rows) {
        put_row<7>(os, {r.t_end, r.dtheta[0], r.dtheta[1], r.dtheta[2], r.dv[0], r.dv[1], r.dv[2]});
    }
}

void write_gps_csv(std::ostream& os, const std::vector<AidFix>& rows)
{
    os << kGpsHeader << '\n';
    for (const auto& r : rows) {
        put_row<7>(os, {r.t, r.p.lat, r.p.lon, r.p.h, r.v[0], r.v[1], r.v[2]});
    }
}

void write_truth_csv(std::ostream& os, const std::vector<TruthRow>& rows)
{
    os << kTruthHeader << '\n';
    for (const auto& r : rows) {
        const Vec4 q = r.q.coeffs();
        put_row<11>(os, {r.t, q[0], q[1], q[2], q[3], r.v[0], r.v[1], r.v[2], r.p.lat, r.p.lon,
                         r.p.h});
    }
}

std::vector<ImuSample> read_imu_csv(std::istream& is)
{
    std::vector<ImuSample> out;
    read_rows<7>(is, kImuHeader, [&](const std::array<double, 7>& f, std::size_t) {
        out.push_back({f[0], {f[1], f[2], f[3]}, {f[4], f[5], f[6]}});
    });
    return out;
}

std::vector<AidFix> read_gps_csv(std::istream& is)
{
    std::vector<AidFix> out;
    read_rows<7>(is, kGpsHeader, [&](const std::array<double, 7>& f, std::size_t) {
        AidFix fix;
        fix.t = f[0];
        fix.p = {f[2], f[1], f[3]};
        fix.v = {f[4], f[5], f[6]};
        out.push_back(fix);
    });
    return out;
}

std::vector<TruthRow> read_truth_csv(std::istream& is)
{
    std::vector<TruthRow> out;
    read_rows<11>(is, kTruthHeader, [&](const std::array<double, 11>& f, std::size_t line) {
        TruthRow r;
        r.t = f[0];
        try {
            r.q = UnitQuaternion(Vec4(f[1], f[2], f[3], f[4]));
        } catch (const InvalidArgument&) {
            throw FormatError("zero quaternion", line);
        }
        r.v = {f[5], f[6], f[7]};
        r.p = {f[9], f[8], f[10]};
        out.push_back(r);
    });
    return out;
}

void write_imu_file(const std::string& path, const std::vector<ImuSample>& rows)
{
    auto os = open_out(path);
    write_imu_csv(os, rows);
}

void write_gps_file(const std::string& path, const std::vector<AidFix>& rows)
{
    auto os = open_out(path);
    write_gps_csv(os, rows);
}

void write_truth_file(const std::string& path, const std::vector<TruthRow>& rows)
{
    auto os = open_out(path);
    write_truth_csv(os, rows);
}

std::vector<ImuSample> read_imu_file(const std::string& path)
{
    auto is = open_in(path);
    return read_imu_csv(is);
}

std::vector<AidFix> read_gps_file(const std::string& path)
{
    auto is = open_in(path);
    return read_gps_csv(is);
}

std::vector<TruthRow> read_truth_file(const std::string& path)
{
    auto is = open_in(path);
    return read_truth_csv(is);
}

}  // namespace ifa
