#include "ladic/mellin/monodromy.hpp"

#include <map>

#include "ladic/core/error.hpp"
#include "ladic/core/text.hpp"

namespace ladic {

int MonodromyData::group_rank() const
{
    if (quotient) return quotient->empty() ? group_rank_hint : static_cast<int>((*quotient)[0].size());
    return directions() ? directions() : group_rank_hint;
}

std::vector<i64> MonodromyData::direction(int k) const
{
    if (quotient) return (*quotient)[k];
    std::vector<i64> e(group_rank(), 0);
    e[k] = 1;
    return e;
}

void MonodromyData::validate() const
{
    require(rank >= 0, ErrorKind::MalformedInput, "negative rank");
    require(entries && entries->prime == prime, ErrorKind::MalformedInput, "entry field does not match l");
    for (const auto& m : M) {
        require(static_cast<int>(m.size()) == rank, ErrorKind::DimensionMismatch, "monodromy matrix has the wrong size");
        for (const auto& row : m) require(static_cast<int>(row.size()) == rank, ErrorKind::DimensionMismatch, "monodromy matrix is not square");
    }
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = i + 1; j < M.size(); ++j)
            if (rank > 0)
                require(mat_mul(M[i], M[j]) == mat_mul(M[j], M[i]), ErrorKind::NonCommuting,
                        "M" + std::to_string(i + 1) + " and M" + std::to_string(j + 1) + " do not commute");
    const mpz_class l = static_cast<long>(prime);
    for (size_t i = 0; i < M.size() && rank > 0; ++i) {
        for (const auto& row : M[i])
            for (const auto& x : row)
                for (const auto& c : x.coeffs()) require(c.get_den() % l != 0, ErrorKind::MalformedInput, "monodromy entry is not l-integral");
        const mpq_class n = determinant(M[i]).norm();
        require(sgn(n) != 0 && n.get_num() % l != 0, ErrorKind::NonInvertible, "det M" + std::to_string(i + 1) + " is not a unit at l");
    }
    if (quotient) {
        require(static_cast<int>(quotient->size()) == directions(), ErrorKind::DimensionMismatch, "quotient needs one row per monodromy matrix");
        for (const auto& row : *quotient) require(row.size() == (*quotient)[0].size(), ErrorKind::MalformedInput, "ragged quotient matrix");
        require(is_saturated(transpose(*quotient), prime), ErrorKind::MalformedInput, "quotient directions do not span a saturated sublattice");
    }
}

MonodromyData MonodromyData::parse(i64 prime, const std::string& text, int default_zeta)
{
    std::map<std::string, std::string> kv;
    for (const auto& part : split(text, ';')) {
        const std::string item = trim_copy(part);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        require(eq != std::string::npos, ErrorKind::MalformedInput, "expected key=value in monodromy data, got '" + item + "'");
        const std::string key = trim_copy(item.substr(0, eq));
        require(!kv.count(key), ErrorKind::MalformedInput, "repeated key " + key);
        kv[key] = trim_copy(item.substr(eq + 1));
    }
    MonodromyData d;
    d.prime = prime;
    require(kv.count("rank"), ErrorKind::MalformedInput, "monodromy data needs rank=");
    d.rank = static_cast<int>(parse_int(kv["rank"]));
    const int zeta = kv.count("zeta") ? static_cast<int>(parse_int(kv["zeta"])) : default_zeta;
    d.entries = CycloField::make(prime, zeta);
    std::map<int, CycMatrix> mats;
    for (const auto& [k, v] : kv) {
        if (k == "rank" || k == "zeta" || k == "quotient" || k == "b") continue;
        require(k.size() >= 2 && k[0] == 'M', ErrorKind::MalformedInput, "unknown key " + k);
        const int idx = static_cast<int>(parse_int(k.substr(1)));
        require(idx >= 1, ErrorKind::MalformedInput, "bad matrix index " + k);
        CycMatrix m;
        if (d.rank > 0)
            for (const auto& row : parse_matrix_cells(v)) {
                m.emplace_back();
                for (const auto& cell : row) m.back().push_back(Cyc::parse(d.entries, cell));
            }
        mats[idx] = m;
    }
    for (int i = 1; i <= static_cast<int>(mats.size()); ++i) {
        require(mats.count(i), ErrorKind::MalformedInput, "monodromy matrices must be numbered M1..Mb");
        d.M.push_back(mats[i]);
    }
    if (kv.count("quotient") && kv["quotient"] != "none") {
        IntMatrix q;
        for (const auto& row : parse_matrix_cells(kv["quotient"])) {
            q.emplace_back();
            for (const auto& c : row) q.back().push_back(parse_int(c));
        }
        d.quotient = q;
    }
    if (kv.count("b")) d.group_rank_hint = static_cast<int>(parse_int(kv["b"]));
    d.validate();
    return d;
}

std::string MonodromyData::serialize() const
{
    std::string out = "rank=" + std::to_string(rank) + "; zeta=" + std::to_string(entries->level);
    for (size_t i = 0; i < M.size(); ++i) {
        out += "; M" + std::to_string(i + 1) + "=[";
        for (size_t r = 0; r < M[i].size(); ++r) {
            out += r ? ",[" : "[";
            for (size_t c = 0; c < M[i][r].size(); ++c) out += (c ? "," : "") + M[i][r][c].to_string();
            out += "]";
        }
        out += "]";
    }
    out += "; quotient=";
    if (!quotient) out += "none";
    else {
        out += "[";
        for (size_t r = 0; r < quotient->size(); ++r) {
            out += r ? ",[" : "[";
            for (size_t c = 0; c < (*quotient)[r].size(); ++c) out += (c ? "," : "") + std::to_string((*quotient)[r][c]);
            out += "]";
        }
        out += "]";
    }
    return out;
}

MonodromyData MonodromyData::scalar(i64 prime, int zeta_level, const std::vector<i64>& exponents)
{
    MonodromyData d;
    d.prime = prime;
    d.rank = 1;
    d.entries = CycloField::make(prime, zeta_level);
    for (i64 c : exponents) d.M.push_back({{Cyc::zeta_power(d.entries, c)}});
    d.validate();
    return d;
}

} // namespace ladic
