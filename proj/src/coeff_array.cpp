#include "taulab/coeff_array.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <stdexcept>

namespace taulab {

void CoefficientArray::set(const BlockPair& block, int i, int j, const Scalar& v) {
    if (block.first <= block.second || block.first >= n_ || block.second < 0)
        throw std::invalid_argument("block pair must satisfy n > a > b >= 0");
    auto& m = blocks_[block];
    if (is_zero(v))
        m.erase({i, j});
    else
        m[{i, j}] = v;
}

Scalar CoefficientArray::get(const BlockPair& block, int i, int j) const {
    auto bit = blocks_.find(block);
    if (bit == blocks_.end()) return Scalar(0);
    auto it = bit->second.find({i, j});
    return it == bit->second.end() ? Scalar(0) : it->second;
}

int CoefficientArray::support_radius() const {
    int r = 0;
    for (const auto& [pair, entries] : blocks_)
        for (const auto& [ij, v] : entries) {
            r = std::max(r, std::abs(ij.first));
            r = std::max(r, std::abs(ij.second));
        }
    return r;
}

CoefficientArray shift(const CoefficientArray& arr, const BlockPair& block, int alpha, int beta) {
    if (!arr.has_block(block)) throw std::invalid_argument("shift: unknown block");
    CoefficientArray out(arr.n());
    for (const auto& [pair, entries] : arr.blocks())
        for (const auto& [ij, v] : entries) {
            if (pair == block)
                out.set(pair, ij.first - alpha, ij.second - beta, v);
            else
                out.set(pair, ij.first, ij.second, v);
        }
    return out;
}

CoefficientArray conjugate_shift(const CoefficientArray& arr, const std::vector<int>& beta) {
    if (static_cast<int>(beta.size()) != arr.n())
        throw std::invalid_argument("conjugate_shift: need one shift per component");
    CoefficientArray out(arr.n());
    for (const auto& [pair, entries] : arr.blocks()) {
        const int da = beta[pair.first], db = beta[pair.second];
        for (const auto& [ij, v] : entries)
            out.set(pair, ij.first + da, ij.second - db, v);
    }
    return out;
}

namespace {

std::string pair_key(const BlockPair& p) {
    return std::to_string(p.first) + std::to_string(p.second);
}

BlockPair parse_pair(const std::string& s) {
    if (s.size() != 2 || !std::isdigit(s[0]) || !std::isdigit(s[1]))
        throw SchemaError("bad block pair: " + s);
    return {s[0] - '0', s[1] - '0'};
}

} // namespace

std::string coeff_to_json(const CoefficientArray& arr) {
    nlohmann::json j;
    j["n"] = arr.n();
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [pair, entries] : arr.blocks()) {
        nlohmann::json b;
        b["pair"] = pair_key(pair);
        nlohmann::json es = nlohmann::json::array();
        for (const auto& [ij, v] : entries) {
            nlohmann::json e;
            e["i"] = ij.first;
            e["j"] = ij.second;
            e["num"] = std::stoll(v.get_num().get_str());
            e["den"] = std::stoll(v.get_den().get_str());
            es.push_back(e);
        }
        b["entries"] = es;
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    return j.dump(2) + "\n";
}

CoefficientArray coeff_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (j.value("loop", false))
        throw SchemaError("loop coefficient file: use the loop loader");
    try {
        int n = j.at("n").get<int>();
        if (n < 2) throw SchemaError("n must be >= 2");
        CoefficientArray arr(n);
        for (const auto& b : j.at("blocks")) {
            BlockPair pair = parse_pair(b.at("pair").get<std::string>());
            for (const auto& e : b.at("entries")) {
                long num = e.at("num").get<long>();
                long den = e.at("den").get<long>();
                arr.set(pair, e.at("i").get<int>(), e.at("j").get<int>(), rat(num, den));
            }
        }
        return arr;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("coefficient file schema: ") + e.what());
    }
}

} // namespace taulab
