#pragma once

namespace wradon {

/// Compensated (Kahan) accumulator. Results depend only on the order of add() calls.
class KahanSum {
public:
    void add(double v) {
        const double y = v - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    KahanSum& operator+=(double v) { add(v); return *this; }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace wradon
