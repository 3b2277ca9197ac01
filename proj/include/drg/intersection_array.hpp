#pragma once

// Intersection arrays {b_0, ..., b_{D-1}; c_1, ..., c_D} of distance-regular
// graphs, with the combinatorial consistency conditions checked eagerly:
// construction either yields a structurally valid array (positive integer
// parameters, monotonicity, nonnegative a_i, integral valencies) or throws
// with the name of the violated condition.  Spectral feasibility is a
// separate, more expensive question handled by the spectrum module.

#include "numeric.hpp"

#include <sstream>

namespace drg {

class IntersectionArray {
public:
    static IntersectionArray from_bc(std::vector<long long> b, std::vector<long long> c) {
        return IntersectionArray(std::move(b), std::move(c));
    }

    // "b0,b1,...,b_{D-1};c1,...,cD", whitespace-insensitive, optional braces
    static IntersectionArray parse(const std::string& text) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
        auto semi = s.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("intersection array needs ';' between b- and c-sequences");
        auto split = [](const std::string& part) {
            std::vector<long long> out;
            std::stringstream ss(part);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) throw std::invalid_argument("empty entry in intersection array");
                size_t pos = 0;
                long long v = std::stoll(item, &pos);
                if (pos != item.size())
                    throw std::invalid_argument("bad integer in intersection array: " + item);
                out.push_back(v);
            }
            return out;
        };
        auto b = split(s.substr(0, semi));
        auto c = split(s.substr(semi + 1));
        if (b.empty()) throw std::invalid_argument("empty b-sequence");
        if (b.size() != c.size())
            throw std::invalid_argument("b- and c-sequences must have the same length");
        return IntersectionArray(std::move(b), std::move(c));
    }

    int D() const { return static_cast<int>(b_.size()); }
    long long k() const { return b_[0]; }

    // b_i defined for 0..D-1; b_D = 0 by convention
    long long b(int i) const {
        if (i < 0 || i > D()) throw std::out_of_range("b index");
        return i == D() ? 0 : b_[i];
    }
    // c_i defined for 1..D; c_0 = 0 by convention
    long long c(int i) const {
        if (i < 0 || i > D()) throw std::out_of_range("c index");
        return i == 0 ? 0 : c_[i - 1];
    }
    long long a(int i) const { return k() - b(i) - c(i); }

    // number of vertices at distance i from a base point
    const BigInt& k_i(int i) const { return ki_.at(i); }
    const BigInt& n() const { return n_; }

    bool operator==(const IntersectionArray& o) const { return b_ == o.b_ && c_ == o.c_; }
    bool operator!=(const IntersectionArray& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "{";
        for (int i = 0; i < D(); ++i) s += (i ? "," : "") + std::to_string(b_[i]);
        s += ";";
        for (int i = 1; i <= D(); ++i) s += (i > 1 ? "," : "") + std::to_string(c_[i - 1]);
        return s + "}";
    }

private:
    std::vector<long long> b_, c_;
    std::vector<BigInt> ki_;
    BigInt n_;

    IntersectionArray(std::vector<long long> b, std::vector<long long> c)
        : b_(std::move(b)), c_(std::move(c)) {
        if (b_.empty() || b_.size() != c_.size())
            throw std::invalid_argument("intersection array needs D >= 1 with matching lengths");
        int d = D();
        if (c_[0] != 1) throw std::invalid_argument("c_1 must equal 1");
        for (int i = 0; i < d; ++i) {
            if (b_[i] < 1) throw std::invalid_argument("b_i must be positive for i < D");
            if (c_[i] < 1) throw std::invalid_argument("c_i must be positive");
        }
        for (int i = 0; i + 1 < d; ++i) {
            if (b_[i] < b_[i + 1]) throw std::invalid_argument("b-sequence must be nonincreasing");
            if (c_[i] > c_[i + 1]) throw std::invalid_argument("c-sequence must be nondecreasing");
        }
        for (int i = 0; i <= d; ++i)
            if (a(i) < 0) throw std::invalid_argument("a_i = k - b_i - c_i must be nonnegative");
        // valencies k_0 = 1, k_i = k_{i-1} b_{i-1} / c_i must be integers
        ki_.assign(d + 1, BigInt(0));
        ki_[0] = 1;
        for (int i = 1; i <= d; ++i) {
            BigInt num = ki_[i - 1] * b_[i - 1];
            if (num % c_[i - 1] != 0)
                throw std::invalid_argument("valency k_" + std::to_string(i) +
                                            " is not an integer");
            ki_[i] = num / c_[i - 1];
        }
        n_ = 0;
        for (auto& kv : ki_) n_ += kv;
    }
};

}  // namespace drg
