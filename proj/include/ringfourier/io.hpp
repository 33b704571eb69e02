#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ringfourier/checks.hpp"
#include "ringfourier/fourier.hpp"
#include "ringfourier/ideals.hpp"

namespace ringfourier {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

inline ordered_json ring_json(const Ring& ring) {
    ordered_json j;
    j["spec"] = ring.spec_string();
    j["size"] = ring.size();
    j["characteristic"] = ring.characteristic();
    j["additive_factors"] = ring.additive_factors();
    j["unit_count"] = ring.unit_count();
    return j;
}

// Extended dump for `ring info`: ideal counts per side and radical data,
// when the ring is small enough to enumerate.
inline ordered_json ring_info_json(const Ring& ring, const Budget& budget = Budget{}) {
    ordered_json j = ring_json(ring);
    if (ring.size() <= 4096) {
        j["left_ideals"] = all_ideals(ring, Side::Left, budget).size();
        j["right_ideals"] = all_ideals(ring, Side::Right, budget).size();
        RadicalReport rad = jacobson_radical(ring, budget);
        j["jacobson_radical_size"] = rad.size;
        j["quotient_size"] = rad.quotient.ring.size();
    } else {
        j["left_ideals"] = nullptr;
        j["right_ideals"] = nullptr;
        j["jacobson_radical_size"] = nullptr;
        j["quotient_size"] = nullptr;
    }
    return j;
}

inline ordered_json ideal_lattice_json(const Ring& ring, const Budget& budget = Budget{}) {
    ordered_json out = ordered_json::array();
    for (Side side : {Side::Left, Side::Right})
        for (const auto& I : all_ideals(ring, side, budget)) {
            ordered_json j;
            j["side"] = side_name(side);
            j["size"] = I.size();
            j["proper"] = I.proper();
            j["generators"] = minimal_generators(I);
            out.push_back(std::move(j));
        }
    return out;
}

inline ordered_json salem_report_json(const SalemReport& r) {
    ordered_json j;
    j["ring"] = r.ring;
    j["d"] = r.d;
    j["variety"] = r.variety;
    j["size"] = r.size;
    j["C"] = r.C;
    j["argmax"] = r.argmax;
    j["lower_bound"] = r.lower_bound;
    j["method"] = r.method;
    j["tolerance"] = r.tolerance;
    return j;
}

// Timing fields stay out of machine-readable records so identical
// invocations emit byte-identical files.
inline ordered_json check_record_json(const CheckRecord& r) {
    ordered_json j;
    j["name"] = r.name;
    j["rings"] = r.rings;
    j["measured"] = r.measured;
    j["expected"] = r.expected;
    j["tolerance"] = r.tolerance;
    j["deviation"] = r.deviation;
    j["pass"] = r.pass;
    j["skipped"] = r.skipped;
    j["seed"] = r.seed;
    j["details"] = r.details;
    return j;
}

inline void write_check_jsonl(const std::vector<CheckRecord>& records, std::ostream& os) {
    for (const auto& r : records) os << check_record_json(r).dump() << "\n";
}

inline void write_check_summary(const std::vector<CheckRecord>& records, std::ostream& os) {
    std::size_t passed = 0, failed = 0, skipped = 0;
    double worst = 0;
    for (const auto& r : records) {
        if (r.skipped)
            ++skipped;
        else if (r.pass)
            ++passed;
        else
            ++failed;
        worst = std::max(worst, r.deviation);
        os << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.skipped)
            os << "  measured=" << detail::fmt_double(r.measured)
               << " expected=" << detail::fmt_double(r.expected)
               << " tol=" << detail::fmt_double(r.tolerance);
        if (!r.details.empty()) os << "  [" << r.details << "]";
        os << "  (" << static_cast<long>(r.runtime_ms) << " ms)\n";
    }
    os << passed << " passed, " << failed << " failed, " << skipped
       << " skipped; max deviation " << detail::fmt_double(worst) << "\n";
}

inline void write_spectrum_csv(const Spectrum& s, std::ostream& os) {
    os << "frequency,re,im,modulus\n";
    for (std::uint64_t f = 0; f < s.coef.size(); ++f)
        os << s.space.to_string(f) << "," << detail::fmt_double(s.coef[f].real()) << ","
           << detail::fmt_double(s.coef[f].imag()) << ","
           << detail::fmt_double(std::abs(s.coef[f])) << "\n";
}

inline void write_variety_csv(const PointSet& set, const std::string& variety_spec,
                              std::ostream& os) {
    os << "# ring=" << set.ring.spec_string() << " d=" << set.d << " variety=" << variety_spec
       << "\n";
    os << "point_index\n";
    for (auto p : set.points) os << p << "\n";
}

struct SweepRow {
    std::string ring;
    std::uint64_t size = 0;
    std::uint64_t characteristic = 0;
    unsigned d = 0;
    std::string variety;
    std::uint64_t v_size = 0;
    double C = 0;
    bool lower_bound = false;
    std::string argmax;
};

inline void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "ring,size,characteristic,d,variety,v_size,C,lower_bound,argmax\n";
    for (const auto& r : rows)
        os << r.ring << "," << r.size << "," << r.characteristic << "," << r.d << ",\""
           << r.variety << "\"," << r.v_size << "," << detail::fmt_double(r.C) << ","
           << (r.lower_bound ? 1 : 0) << ",\"" << r.argmax << "\"\n";
}

} // namespace ringfourier
