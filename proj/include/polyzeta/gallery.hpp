#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyzeta/contour.hpp"
#include "polyzeta/types.hpp"

namespace polyzeta {

// One machine-checkable expectation about an entry: the zero count of the
// built function in a region, compared against a bound.
struct GalleryClaim {
    ComplexRect region;
    std::string relation;  // "==", ">=", ">"
    long long value = 0;
    std::string note;
};

struct GalleryEntry {
    std::string name;
    std::string description;
    std::map<std::string, double> default_params;  // complex params split _re/_im
    std::vector<GalleryClaim> claims;
};

std::vector<std::string> gallery_list();
const GalleryEntry& gallery_describe(const std::string& name);

// Builds the entry's AnalyticFunction; unknown keys in params are rejected.
AnalyticFunction gallery_build(const std::string& name,
                               const std::map<std::string, double>& params = {});

// Zero count of the lattice-twist function minus its constant, i.e.
// (1 - 9^{9(s + i tau - 3/4)}) zeta(s + i tau), in the fixed disk
// center 3/4, radius 0.2; expected >= 1 for every tau.
ZeroReport lattice_twist_disk_check(double tau, const SamplingPolicy& policy = {});

}  // namespace polyzeta
