#include "ifa/harness/runner.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

EulerAngles to_degrees(const EulerAngles& e)
{
    return {e.roll * kRadToDeg, e.pitch * kRadToDeg, e.yaw * kRadToDeg};
}

std::variant<VifAligner, PifAligner> make_impl(Method method, const NavVelocity& v0,
                                               const GeodeticPosition& p0, double interval,
                                               AlignerOptions options)
{
    if (method == Method::vif) {
        return VifAligner(v0, p0, interval, options);
    }
    return PifAligner(v0, p0, interval, options);
}

}  // namespace

std::string_view method_name(Method m) { return m == Method::vif ? "vif" : "pif"; }

Method parse_method(std::string_view name)
{
    if (name == "vif") {
        return Method::vif;
    }
    if (name == "pif") {
        return Method::pif;
    }
    throw InvalidArgument("unknown method '" + std::string(name) + "' (expected vif or pif)");
}

Aligner::Aligner(Method method, const NavVelocity& v0, const GeodeticPosition& p0,
                 double interval, AlignerOptions options)
    : impl_(make_impl(method, v0, p0, interval, options))
{
}

std::optional<AlignmentEstimate> Aligner::update(const ImuInterval& imu, const AidFix& prev,
                                                 const AidFix& next)
{
    return std::visit([&](auto& a) { return a.update(imu, prev, next); }, impl_);
}

AlignmentEstimate Aligner::estimate() const
{
    return std::visit([](const auto& a) { return a.estimate(); }, impl_);
}

Method Aligner::method() const
{
    return std::holds_alternative<VifAligner>(impl_) ? Method::vif : Method::pif;
}

std::pair<Vec3, Vec3> Aligner::observation() const
{
    if (const auto* v = std::get_if<VifAligner>(&impl_)) {
        return {v->state().alpha_v, v->state().beta_v};
    }
    const auto& p = std::get<PifAligner>(impl_).state();
    return {p.alpha_p, p.beta_p};
}

const Kmatrix& Aligner::k() const
{
    return std::visit([](const auto& a) -> const Kmatrix& { return a.state().k; }, impl_);
}

const ReportRow* RunReport::at(double t) const
{
    const ReportRow* best = nullptr;
    for (const auto& row : rows) {
        if (best == nullptr || std::abs(row.t - t) < std::abs(best->t - t)) {
            best = &row;
        }
    }
    return best;
}

EulerAngles attitude_error(const Dcm& estimate, const Dcm& truth)
{
    return dcm_to_euler(estimate * truth.transpose());
}

RunReport run_alignment(const AlignmentInput& in, const RunOptions& options,
                        std::span<const TruthSample> truth)
{
    if (in.fixes.size() != in.imu.size() + 1) {
        throw InvalidArgument("aiding stream must hold one more fix than IMU intervals");
    }
    if (!truth.empty() && truth.size() != in.fixes.size()) {
        throw InvalidArgument("truth must be sampled at every aiding epoch");
    }
    if (options.record_every < 1) {
        throw InvalidArgument("record_every must be >= 1");
    }

    RunReport report;
    report.method = options.method;
    report.seed = options.seed;
    report.run = options.run;
    report.config_hash = options.config_hash;
    report.has_truth = !truth.empty();
    if (in.imu.empty()) {
        return report;
    }

    const AidFix& first = in.fixes.front();
    Aligner aligner(options.method, first.v, first.p, in.interval, options.aligner);
    const double t0 = first.t;
    int solves = 0;
    std::optional<AlignmentEstimate> last;
    for (std::size_t k = 0; k < in.imu.size(); ++k) {
        auto est = aligner.update(in.imu[k], in.fixes[k], in.fixes[k + 1]);
        if (!est) {
            continue;
        }
        last = est;
        if (++solves % options.record_every != 0 && k + 1 != in.imu.size()) {
            continue;
        }
        ReportRow row;
        row.t = in.fixes[k + 1].t - t0;
        row.estimate = to_degrees(dcm_to_euler(est->body_to_nav_now));
        row.degenerate = est->solution.degenerate;
        if (report.has_truth) {
            row.error = to_degrees(attitude_error(est->body_to_nav_now, truth[k + 1].body_to_nav));
        }
        report.rows.push_back(row);
    }
    if (!last) {
        last = aligner.estimate();
    }
    report.final_spectrum = jacobi_eigen(aligner.k().matrix()).values;
    report.degenerate_at_end = last->solution.degenerate;
    return report;
}

std::string report_csv(const RunReport& report)
{
    std::ostringstream os;
    os << std::setprecision(12);
    os << "# method=" << method_name(report.method) << " seed=" << report.seed
       << " run=" << report.run << " config_hash=" << std::hex << report.config_hash << std::dec
       << '\n';
    os << "# final_spectrum=" << report.final_spectrum[0] << ',' << report.final_spectrum[1] << ','
       << report.final_spectrum[2] << ',' << report.final_spectrum[3] << '\n';
    os << "t_s,roll_deg,pitch_deg,yaw_deg";
    if (report.has_truth) {
        os << ",err_roll_deg,err_pitch_deg,err_yaw_deg";
    }
    os << ",degenerate\n";
    for (const auto& r : report.rows) {
        os << r.t << ',' << r.estimate.roll << ',' << r.estimate.pitch << ',' << r.estimate.yaw;
        if (r.error) {
            os << ',' << r.error->roll << ',' << r.error->pitch << ',' << r.error->yaw;
        }
        os << ',' << (r.degenerate ? 1 : 0) << '\n';
    }
    return os.str();
}

void write_report_csv(const RunReport& report, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out << report_csv(report);
}

}  // namespace ifa
