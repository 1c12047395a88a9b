#pragma once

// Machine-checkable certificates: a theorem certificate is an ordered chain
// of steps, each carrying a claim, a method tag, and a payload with enough
// data to re-verify the step from the file alone. Serialization is canonical
// (insertion-ordered keys, exact integers/rationals as decimal strings), so
// two runs emit identical bytes.

#include "cdx/intpoly.hpp"
#include "cdx/quadint.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cdx {

using Json = nlohmann::ordered_json;

struct CertStep {
    std::string claim;
    std::string method;
    Json payload;
    bool verified = false;
};

struct TheoremCertificate {
    std::string id;
    Json parameters;
    std::vector<CertStep> steps;
    bool verified = false;

    CertStep& add(std::string claim, std::string method, Json payload, bool ok) {
        steps.push_back(CertStep{std::move(claim), std::move(method), std::move(payload), ok});
        verified = steps.size() == 1 ? ok : (verified && ok);
        return steps.back();
    }
    bool all_steps_verified() const {
        for (const auto& s : steps)
            if (!s.verified) return false;
        return true;
    }
};

// ---- exact-value JSON helpers (numbers always travel as strings) ----

Json json_int(const Int& n);
Json json_rat(const Rat& q);
Json json_poly(const IntPoly& p);
Json json_quad(const QuadInt& q);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntPoly poly_from_json(const Json& j);
QuadInt quad_from_json(const Json& j);

std::string certificate_to_json(const TheoremCertificate& cert);
TheoremCertificate certificate_from_json(const std::string& text);

// Canonical JSON emission; refuses unfinalized I/O errors loudly.
void emit_certificate(const TheoremCertificate& cert, const std::string& path);
TheoremCertificate load_certificate(const std::string& path);

// Re-verifies every step of a loaded certificate from its payload, using the
// same library routines the builder used. Scan steps re-run at their recorded
// ranges. Returns false on the first step that fails to reproduce.
bool recheck_certificate(const TheoremCertificate& cert, std::string* first_failure = nullptr);

}  // namespace cdx
