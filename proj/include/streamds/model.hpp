#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "streamds/types.hpp"

namespace streamds {

inline constexpr double kDefaultRhoFloor = 0.05;

/// A classifier's probability of labeling correctly, constrained to
/// 0.5 < p <= 1 - rho_floor < 1. Construction rejects anything outside.
class Competence {
public:
    explicit Competence(double p, double rho_floor = kDefaultRhoFloor);

    double p() const { return p_; }
    double rho_floor() const { return rho_floor_; }

    friend bool operator==(const Competence&, const Competence&) = default;

private:
    double p_;
    double rho_floor_;
};

/// An arriving item. True label and per-classifier labels are drawn once at
/// creation and never change; algorithms see only `drawn_labels` keys
/// (who *can* label) until an assignment reveals the label to the learner.
class Sample {
public:
    Sample(SampleId id, Slot arrival_slot, double weight, int true_label,
           std::map<ClassifierId, int> drawn_labels);

    SampleId id() const { return id_; }
    Slot arrival_slot() const { return arrival_slot_; }
    double weight() const { return weight_; }
    int true_label() const { return true_label_; }
    const std::map<ClassifierId, int>& drawn_labels() const { return drawn_labels_; }

    bool can_use(ClassifierId m) const { return drawn_labels_.count(m) > 0; }
    int drawn_label(ClassifierId m) const;

private:
    SampleId id_;
    Slot arrival_slot_;
    double weight_;
    int true_label_;
    std::map<ClassifierId, int> drawn_labels_;
};

/// The capacity unit "classifier m in slot t".
struct ResourceBlock {
    ClassifierId classifier = 0;
    Slot slot = 0;

    auto operator<=>(const ResourceBlock&) const = default;
};

/// Full record of (sample, classifier, slot) assignments plus exit slots.
/// Inserts violating per-(classifier, slot) capacity or the one-label-per-
/// (sample, classifier) rule are rejected with an exception.
class AssignmentLedger {
public:
    struct Entry {
        SampleId sample = 0;
        ClassifierId classifier = 0;
        Slot slot = 0;

        auto operator<=>(const Entry&) const = default;
    };

    void append(SampleId sample, ClassifierId classifier, Slot slot);
    void record_exit(SampleId sample, Slot slot);

    const std::vector<Entry>& entries() const { return entries_; }
    const std::map<SampleId, Slot>& exits() const { return exits_; }

    /// Classifiers assigned to `sample` at slots <= upto_slot. Unknown
    /// samples yield the empty set.
    std::set<ClassifierId> used_classifiers(SampleId sample, Slot upto_slot) const;

    friend bool operator==(const AssignmentLedger& a, const AssignmentLedger& b) {
        return a.entries_ == b.entries_ && a.exits_ == b.exits_;
    }

private:
    std::vector<Entry> entries_;
    std::map<SampleId, Slot> exits_;
    std::set<std::pair<ClassifierId, Slot>> block_index_;
    std::set<std::pair<SampleId, ClassifierId>> pair_index_;
};

inline AssignmentLedger make_ledger() { return {}; }

enum class ArrivalKind { poisson, replay };

struct ArrivalSpec {
    ArrivalKind kind = ArrivalKind::poisson;
    double rate = 5.0;  // Poisson arrivals per slot
};

/// Simulation parameters. Serializes to/from a flat key = value file.
struct SimConfig {
    int horizon = 0;       // T
    int n_classifiers = 0;  // M
    std::vector<Competence> competences;
    ArrivalSpec arrival;
    std::vector<double> weight_support = {3, 4, 5, 6, 7, 8, 9, 10};
    double accuracy_scale = 1.0;  // c
    std::uint64_t seed = 1;
    int max_arrivals_per_slot = 20;  // eta; reported, not enforced on Poisson draws
    double rho_floor = kDefaultRhoFloor;

    double mean_weight() const;
    void validate() const;

    void save(const std::filesystem::path& path) const;
    static SimConfig load(const std::filesystem::path& path);
};

}  // namespace streamds
