#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skelcat {

using Scalar = std::complex<double>;

struct Tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;
};

// |x-y| <= abs_eps + rel_eps*max(|x|,|y|)
inline bool approx_eq(Scalar x, Scalar y, const Tolerance& tol) {
    double m = std::max(std::abs(x), std::abs(y));
    return std::abs(x - y) <= tol.abs_eps + tol.rel_eps * m;
}

inline double residual(Scalar x, Scalar y) { return std::abs(x - y); }

// ---------------------------------------------------------------------------
// errors

struct SkelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : SkelError {
    using SkelError::SkelError;
};

struct UnsupportedMultiplicity : SkelError {
    using SkelError::SkelError;
};

struct SchemaError : SkelError {
    using SkelError::SkelError;
};

struct InconsistentSystem : SkelError {
    using SkelError::SkelError;
};

struct UnboundedBranching : SkelError {
    using SkelError::SkelError;
};

// ---------------------------------------------------------------------------
// check reports

struct CheckRecord {
    std::string diagram;          // diagram / equation family id
    std::vector<int> indices;     // index tuple of the instance checked
    double resid = 0.0;
    bool ok = true;
};

struct CheckReport {
    std::string suite;
    std::string instance;
    Tolerance tol;
    std::string gauge = "coev=1; ihom counit=1; unit pinned";
    bool pass = true;
    std::size_t checked = 0;
    std::size_t failed = 0;
    // worst offender
    CheckRecord worst;
    // all failing records (sorted by diagram id then index tuple)
    std::vector<CheckRecord> failures;

    // compare two scalars under the suite tolerance
    void note_cmp(const std::string& diagram, std::vector<int> idx, Scalar lhs,
                  Scalar rhs, const Tolerance& t) {
        double r = residual(lhs, rhs);
        double m = std::max(std::abs(lhs), std::abs(rhs));
        note(diagram, std::move(idx), r, t, t.abs_eps + t.rel_eps * m);
    }

    // raw residual with explicit threshold (defaults to abs_eps)
    void note(const std::string& diagram, std::vector<int> idx, double r,
              const Tolerance& t, double threshold = -1.0) {
        ++checked;
        bool ok = r <= (threshold >= 0 ? threshold : t.abs_eps);
        if (r > worst.resid) {
            worst.diagram = diagram;
            worst.indices = idx;
            worst.resid = r;
            worst.ok = ok;
        }
        if (!ok) {
            ++failed;
            pass = false;
            failures.push_back({diagram, std::move(idx), r, false});
        }
    }

    void sort_failures() {
        std::sort(failures.begin(), failures.end(),
                  [](const CheckRecord& a, const CheckRecord& b) {
                      if (a.diagram != b.diagram) return a.diagram < b.diagram;
                      return a.indices < b.indices;
                  });
    }

    void merge(const CheckReport& other) {
        checked += other.checked;
        failed += other.failed;
        if (!other.pass) pass = false;
        if (other.worst.resid > worst.resid) worst = other.worst;
        failures.insert(failures.end(), other.failures.begin(),
                        other.failures.end());
    }
};

// ---------------------------------------------------------------------------
// small dense tensor with named axes; indices are label ids per axis

struct LabeledTensor {
    std::vector<std::string> axes;   // axis names
    std::vector<int> dims;           // axis sizes
    std::vector<int> data;           // row-major integer entries (multiplicities)

    LabeledTensor() = default;
    LabeledTensor(std::vector<std::string> ax, std::vector<int> dm)
        : axes(std::move(ax)), dims(std::move(dm)) {
        std::size_t n = 1;
        for (int d : dims) {
            if (d <= 0) throw ValidationError("LabeledTensor: nonpositive axis");
            n *= static_cast<std::size_t>(d);
        }
        data.assign(n, 0);
    }

    std::size_t flat(const std::vector<int>& idx) const {
        if (idx.size() != dims.size())
            throw ValidationError("LabeledTensor: rank mismatch");
        std::size_t f = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 0 || idx[i] >= dims[i])
                throw ValidationError("LabeledTensor: index out of range");
            f = f * static_cast<std::size_t>(dims[i]) +
                static_cast<std::size_t>(idx[i]);
        }
        return f;
    }

    int& at(const std::vector<int>& idx) { return data[flat(idx)]; }
    int at(const std::vector<int>& idx) const { return data[flat(idx)]; }
};

}  // namespace skelcat
