#include "ptmrad/serialize.hpp"

namespace ptmrad {

json to_json(const Int& v) { return v.get_str(); }

json to_json(const PartitionBlocks& part) {
    json j;
    j["p"] = part.p.value();
    j["M"] = part.M;
    j["L"] = part.L;
    j["blocks"] = part.blocks;
    return j;
}

json to_json(const ProuhetSum& sum) {
    json j;
    j["m"] = sum.m;
    j["value"] = to_json(sum.value);
    j["all_blocks_equal"] = sum.all_blocks_equal;
    return j;
}

json to_json(const CoefficientVector& coeffs) {
    json j;
    j["p"] = coeffs.p.value();
    json b = json::array();
    for (const auto& v : coeffs.B) b.push_back(to_json(v));
    j["B"] = std::move(b);
    return j;
}

json to_json(const SidelobeReport& report) {
    json j;
    j["p"] = report.p.value();
    j["M"] = report.M;
    j["L"] = report.L;
    j["B0"] = to_json(report.b0);
    json rows = json::array();
    for (const auto& rec : report.records) {
        json row;
        row["m"] = rec.m;
        row["P_m"] = to_json(rec.prouhet);
        row["N_m"] = to_json(rec.coefficient);
        row["lhs"] = to_json(rec.lhs);
        row["rhs"] = to_json(rec.rhs);
        row["equal"] = rec.equal;
        rows.push_back(std::move(row));
    }
    j["moments"] = std::move(rows);
    j["all_equal"] = report.all_equal;
    return j;
}

json to_json(const ExponentShiftReport& report) {
    json j;
    j["direct_bit"] = report.direct_bit;
    j["branch_bit"] = report.branch_bit;
    j["lhs_bit"] = report.lhs_bit;
    j["rhs_bit"] = report.rhs_bit;
    j["branch_matches"] = report.branch_matches;
    j["congruence_holds"] = report.congruence_holds;
    return j;
}

json to_json(const std::vector<RecurrenceRule>& rules) {
    json rows = json::array();
    for (const auto& rule : rules) {
        json row;
        row["i"] = rule.i;
        row["r"] = rule.r;
        row["x"] = rule.companion;
        rows.push_back(std::move(row));
    }
    return rows;
}

json weight_table_json(Modulus p, int length) {
    json rows = json::array();
    for (std::uint32_t i = 0; i < p.weight_count(); ++i) {
        json row = json::array();
        for (int n = 0; n < length; ++n)
            row.push_back(weight(i, static_cast<std::uint64_t>(n), p));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_weight_table_csv(std::ostream& out, Modulus p, int length) {
    out << "i";
    for (int n = 0; n < length; ++n) out << ",n" << n;
    out << "\n";
    for (std::uint32_t i = 0; i < p.weight_count(); ++i) {
        out << i;
        for (int n = 0; n < length; ++n)
            out << "," << weight(i, static_cast<std::uint64_t>(n), p);
        out << "\n";
    }
}

void write_partition_csv(std::ostream& out, const PartitionBlocks& part) {
    out << "n,v_p,block\n";
    for (std::uint64_t n = 0; n < part.L; ++n) {
        const int v = block_index(n, part.p);
        out << n << "," << v << "," << v << "\n";
    }
}

void write_sidelobe_csv(std::ostream& out, const SidelobeReport& report) {
    out << "m,P_m,N_m,lhs,rhs,equal\n";
    for (const auto& rec : report.records)
        out << rec.m << "," << rec.prouhet << "," << rec.coefficient << "," << rec.lhs << ","
            << rec.rhs << "," << (rec.equal ? 1 : 0) << "\n";
}

}  // namespace ptmrad
