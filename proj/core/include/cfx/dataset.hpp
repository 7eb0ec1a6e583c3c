#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfx/image.hpp"
#include "cfx/rng.hpp"

namespace cfx {

enum class DiseaseLabel { healthy, sick };
enum class Subgroup { majority_S, minority_S, minority_H, majority_H };
enum class Split { train, val, test };

std::string to_string(DiseaseLabel v);
std::string to_string(Subgroup v);
std::string to_string(Split v);
DiseaseLabel disease_label_from_string(const std::string& s);
Subgroup subgroup_from_string(const std::string& s);
Split split_from_string(const std::string& s);

// Subgroup is a pure function of (disease, artifact). The majority cells are
// sick-with-artifact and healthy-without-artifact.
Subgroup subgroup_for(DiseaseLabel label, bool artifact_present);

struct ImageRecord {
    std::string id;
    Image image;
    DiseaseLabel disease_label = DiseaseLabel::healthy;
    bool artifact_present = false;
    Subgroup subgroup = Subgroup::majority_H;
    Split split = Split::train;
};

// The injected spurious correlation: a filled disk painted at a fixed
// intensity (black by default).
struct ArtifactSpec {
    int radius = 3;
    std::optional<std::pair<int, int>> center;  // (row, col); image center when unset
    float intensity = 0.0f;
    bool radius_below_one_is_noop = false;  // radius < 1 leaves the image untouched
};

// Synthetic stand-in for the disease pathology: a bright disk in the lower
// part of the image, never overlapping the center artifact region under the
// default configuration.
struct DiseaseMarkerSpec {
    double position_row_min_frac = 0.65;  // marker center row >= frac * side
    int radius_min = 4;
    int radius_max = 7;
    double intensity_delta_min = 0.22;
    double intensity_delta_max = 0.38;
    int distractor_count_max = 3;         // faint blobs added to every image
    double distractor_delta_max = 0.10;
};

// Four-subgroup composition: either absolute counts per subgroup or artifact
// prevalences per class together with class totals.
struct SubgroupPlan {
    // count mode (used when counts is set): order majority_S, minority_S, minority_H, majority_H
    std::optional<std::array<long, 4>> counts;
    // prevalence mode
    double p_artifact_sick = 0.9;
    double p_artifact_healthy = 0.1;
    long n_sick = 0;
    long n_healthy = 0;

    std::array<double, 3> split_fractions = {0.7, 0.1, 0.2};
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// Paints every lattice point within Euclidean distance `radius` of the center
// to `intensity`. The input image is not modified.
Image inject_artifact(const Image& image, const ArtifactSpec& spec);

// Low-frontend background (bilinear noise plus faint distractor blobs); sick
// images additionally carry one bright marker disk. Deterministic in `rng`.
Image synthesize_base_image(Rng& rng, int side, DiseaseLabel label, const DiseaseMarkerSpec& marker);

// Chooses which records of each class carry the artifact. Count mode realizes
// the plan exactly; prevalence mode rounds prevalence * class size half to
// even. Assignment is a uniform choice within class given the rng.
std::vector<std::pair<bool, Subgroup>> assign_subgroups(
    const std::vector<DiseaseLabel>& labels, const SubgroupPlan& plan, Rng& rng);

// Stratified split: largest-remainder rounding per subgroup, then a one-record
// adjustment so every positive-fraction split is populated when the subgroup
// has at least 3 records.
void split_dataset(std::vector<ImageRecord>& records,
                   const std::array<double, 3>& fractions, std::uint64_t seed);

// Full synthetic desk-scale dataset: synthesize base images, assign subgroups,
// inject artifacts, split.
std::vector<ImageRecord> forge_synthetic_dataset(int side, const SubgroupPlan& plan,
                                                 const ArtifactSpec& artifact,
                                                 const DiseaseMarkerSpec& marker);

// External-corpus ingestion: a directory of PNGs plus a labels CSV with
// header `path,disease_label`. Images are loaded as grayscale in [0,1] and
// bilinearly resized to `side`; artifact injection and splitting follow the
// plan exactly as in the synthetic path.
std::vector<ImageRecord> ingest_external_corpus(const std::string& directory, int side,
                                                const SubgroupPlan& plan,
                                                const ArtifactSpec& artifact);

}  // namespace cfx
