#include "ifa/harness/state_io.hpp"

#include <json.hpp>

#include "ifa/errors.hpp"

namespace ifa {

namespace {

using nlohmann::json;

template <class M>
json put(const M& m)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            a.push_back(m(i, j));
        }
    }
    return a;
}

template <class M>
M get(const json& j, const char* key)
{
    M m;
    const auto& a = j.at(key);
    if (!a.is_array() || a.size() != static_cast<std::size_t>(m.size())) {
        throw FormatError(std::string("field '") + key + "' has the wrong size", 0);
    }
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            m(i, c) = a.at(n++).get<double>();
        }
    }
    return m;
}

Dcm get_chain(const json& j, const char* key)
{
    Dcm c = get<Dcm>(j, key);
    if (!is_rotation(c, 1e-9)) {
        throw NotARotation(std::string("stored '") + key + "' is not a rotation");
    }
    return c;
}

json common(std::int64_t updates, double interval, const Dcm& nav, const Dcm& body,
            const NavVelocity& v0, const GeodeticPosition& p0, const Kmatrix& k)
{
    json j;
    j["updates"] = updates;
    j["interval"] = interval;
    j["nav_chain"] = put(nav);
    j["body_chain"] = put(body);
    j["v0"] = put(v0);
    j["p0"] = put(p0.as_vector());
    j["k"] = put(k.matrix());
    return j;
}

template <class State>
void read_common(const json& j, State& st)
{
    st.updates = j.at("updates").get<std::int64_t>();
    st.interval = j.at("interval").get<double>();
    st.nav_chain = get_chain(j, "nav_chain");
    st.body_chain = get_chain(j, "body_chain");
    st.v0 = get<Vec3>(j, "v0");
    const Vec3 p = get<Vec3>(j, "p0");
    st.p0 = {p[0], p[1], p[2]};
    st.k = Kmatrix(get<Mat4>(j, "k"));
    if (st.updates < 0 || !(st.interval > 0.0)) {
        throw FormatError("invalid update count or interval", 0);
    }
}

template <class F>
auto parse(const std::string& text, const char* kind, F&& f)
{
    try {
        const json j = json::parse(text);
        if (j.value("kind", "") != kind) {
            throw FormatError(std::string("expected a ") + kind + " state", 0);
        }
        return f(j);
    } catch (const json::parse_error& e) {
        throw FormatError(e.what(), 0);
    } catch (const json::exception& e) {
        throw FormatError(e.what(), 0);
    }
}

}  // namespace

std::string to_json(const VifState& st)
{
    json j = common(st.updates, st.interval, st.nav_chain, st.body_chain, st.v0, st.p0, st.k);
    j["kind"] = "vif";
    j["alpha_v"] = put(st.alpha_v);
    j["beta_prime_v"] = put(st.beta_prime_v);
    j["beta_v"] = put(st.beta_v);
    return j.dump(1);
}

std::string to_json(const PifState& st)
{
    json j = common(st.updates, st.interval, st.nav_chain, st.body_chain, st.v0, st.p0, st.k);
    j["kind"] = "pif";
    j["alpha_p"] = put(st.alpha_p);
    j["body_prefix"] = put(st.body_prefix);
    j["u_r"] = put(st.u_r);
    j["u_v"] = put(st.u_v);
    j["u_g"] = put(st.u_g);
    j["nav_prefix_v"] = put(st.nav_prefix_v);
    j["nav_prefix_g"] = put(st.nav_prefix_g);
    j["r_n"] = put(st.r_n);
    j["beta_p"] = put(st.beta_p);
    return j.dump(1);
}

VifState vif_state_from_json(const std::string& text)
{
    return parse(text, "vif", [](const json& j) {
        VifState st;
        read_common(j, st);
        st.alpha_v = get<Vec3>(j, "alpha_v");
        st.beta_prime_v = get<Vec3>(j, "beta_prime_v");
        st.beta_v = get<Vec3>(j, "beta_v");
        return st;
    });
}

PifState pif_state_from_json(const std::string& text)
{
    return parse(text, "pif", [](const json& j) {
        PifState st;
        read_common(j, st);
        st.alpha_p = get<Vec3>(j, "alpha_p");
        st.body_prefix = get<Vec3>(j, "body_prefix");
        st.u_r = get<Vec3>(j, "u_r");
        st.u_v = get<Vec3>(j, "u_v");
        st.u_g = get<Vec3>(j, "u_g");
        st.nav_prefix_v = get<Vec3>(j, "nav_prefix_v");
        st.nav_prefix_g = get<Vec3>(j, "nav_prefix_g");
        st.r_n = get<Vec3>(j, "r_n");
        st.beta_p = get<Vec3>(j, "beta_p");
        return st;
    });
}

}  // namespace ifa
