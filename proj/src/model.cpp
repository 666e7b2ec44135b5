#include "streamds/model.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace streamds {

Competence::Competence(double p, double rho_floor) : p_(p), rho_floor_(rho_floor) {
    if (!(rho_floor > 0.0) || !(rho_floor < 0.5))
        throw std::invalid_argument("competence margin rho must lie in (0, 1/2)");
    if (!(p > 0.5) || !(p <= 1.0 - rho_floor)) {
        std::ostringstream msg;
        msg << "competence p=" << p << " outside (0.5, " << 1.0 - rho_floor << "]";
        throw std::invalid_argument(msg.str());
    }
}

Sample::Sample(SampleId id, Slot arrival_slot, double weight, int true_label,
               std::map<ClassifierId, int> drawn_labels)
    : id_(id),
      arrival_slot_(arrival_slot),
      weight_(weight),
      true_label_(true_label),
      drawn_labels_(std::move(drawn_labels)) {
    if (arrival_slot_ < 1) throw std::invalid_argument("arrival slot must be >= 1");
    if (!(weight_ > 0.0)) throw std::invalid_argument("sample weight must be positive");
    if (true_label_ != kLabelPos && true_label_ != kLabelNeg)
        throw std::invalid_argument("true label must be +1 or -1");
    for (const auto& [m, lab] : drawn_labels_) {
        if (m < 1) throw std::invalid_argument("classifier id must be >= 1");
        if (lab != kLabelPos && lab != kLabelNeg)
            throw std::invalid_argument("drawn label must be +1 or -1");
    }
}

int Sample::drawn_label(ClassifierId m) const {
    auto it = drawn_labels_.find(m);
    if (it == drawn_labels_.end())
        throw std::out_of_range("sample has no drawn label for classifier " + std::to_string(m));
    return it->second;
}

void AssignmentLedger::append(SampleId sample, ClassifierId classifier, Slot slot) {
    if (slot < 1) throw std::invalid_argument("assignment slot must be >= 1");
    if (classifier < 1) throw std::invalid_argument("classifier id must be >= 1");
    if (block_index_.count({classifier, slot}))
        throw std::invalid_argument("resource block (" + std::to_string(classifier) + "," +
                                    std::to_string(slot) + ") already holds a sample");
    if (pair_index_.count({sample, classifier}))
        throw std::invalid_argument("sample " + std::to_string(sample) +
                                    " already labeled by classifier " + std::to_string(classifier));
    entries_.push_back({sample, classifier, slot});
    block_index_.insert({classifier, slot});
    pair_index_.insert({sample, classifier});
}

void AssignmentLedger::record_exit(SampleId sample, Slot slot) {
    auto [it, inserted] = exits_.emplace(sample, slot);
    (void)it;
    if (!inserted)
        throw std::invalid_argument("sample " + std::to_string(sample) + " already exited");
}

std::set<ClassifierId> AssignmentLedger::used_classifiers(SampleId sample, Slot upto_slot) const {
    std::set<ClassifierId> out;
    for (const Entry& e : entries_)
        if (e.sample == sample && e.slot <= upto_slot) out.insert(e.classifier);
    return out;
}

double SimConfig::mean_weight() const {
    if (weight_support.empty()) return 0.0;
    double sum = std::accumulate(weight_support.begin(), weight_support.end(), 0.0);
    return sum / static_cast<double>(weight_support.size());
}

void SimConfig::validate() const {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (n_classifiers < 1) throw std::invalid_argument("n_classifiers must be >= 1");
    if (!competences.empty() && static_cast<int>(competences.size()) != n_classifiers)
        throw std::invalid_argument("competences size does not match n_classifiers");
    if (weight_support.empty()) throw std::invalid_argument("weight_support must be nonempty");
    for (double w : weight_support)
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
    if (!(accuracy_scale > 0.0)) throw std::invalid_argument("accuracy_scale must be positive");
    if (max_arrivals_per_slot < 1) throw std::invalid_argument("max_arrivals_per_slot must be >= 1");
    if (arrival.kind == ArrivalKind::poisson && !(arrival.rate > 0.0))
        throw std::invalid_argument("poisson rate must be positive");
}

namespace {

std::string join_doubles(const std::vector<double>& v) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

std::vector<double> split_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void SimConfig::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open config file for writing: " + path.string());
    out.precision(17);
    out << "horizon = " << horizon << "\n";
    out << "n_classifiers = " << n_classifiers << "\n";
    out << "arrival = " << (arrival.kind == ArrivalKind::poisson ? "poisson" : "replay") << "\n";
    out << "arrival_rate = " << arrival.rate << "\n";
    out << "weight_support = " << join_doubles(weight_support) << "\n";
    out << "accuracy_scale = " << accuracy_scale << "\n";
    out << "seed = " << seed << "\n";
    out << "max_arrivals_per_slot = " << max_arrivals_per_slot << "\n";
    out << "rho_floor = " << rho_floor << "\n";
    if (!competences.empty()) {
        std::vector<double> ps;
        ps.reserve(competences.size());
        for (const auto& c : competences) ps.push_back(c.p());
        out << "competences = " << join_doubles(ps) << "\n";
    }
}

SimConfig SimConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    SimConfig cfg;
    cfg.weight_support.clear();
    std::vector<double> ps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        try {
            if (key == "horizon") cfg.horizon = std::stoi(val);
            else if (key == "n_classifiers") cfg.n_classifiers = std::stoi(val);
            else if (key == "arrival") {
                if (val == "poisson") cfg.arrival.kind = ArrivalKind::poisson;
                else if (val == "replay") cfg.arrival.kind = ArrivalKind::replay;
                else throw std::runtime_error("unknown arrival kind: " + val);
            } else if (key == "arrival_rate") cfg.arrival.rate = std::stod(val);
            else if (key == "weight_support") cfg.weight_support = split_doubles(val);
            else if (key == "accuracy_scale") cfg.accuracy_scale = std::stod(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "max_arrivals_per_slot") cfg.max_arrivals_per_slot = std::stoi(val);
            else if (key == "rho_floor") cfg.rho_floor = std::stod(val);
            else if (key == "competences") ps = split_doubles(val);
            else throw std::runtime_error("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": bad value for key " + key);
        }
    }
    if (cfg.weight_support.empty()) cfg.weight_support = {3, 4, 5, 6, 7, 8, 9, 10};
    for (double p : ps) cfg.competences.emplace_back(p, cfg.rho_floor);
    cfg.validate();
    return cfg;
}

}  // namespace streamds
