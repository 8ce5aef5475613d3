#include "classnum/verify.hpp"

#include "classnum/bound.hpp"

#include <algorithm>
#include <sstream>

namespace classnum {

namespace {

/*
 * The geometric congruence needs a cyclic step L/F of odd prime degree q
 * with a known discriminant for F.  Two shapes of record pin that down:
 *   - N itself an odd prime: F is the rationals (m = 1, D = 1);
 *   - N = 2q with q an odd prime, for the imaginary families whose prime
 *     conductor c = 3 mod 4 names the quadratic subfield Q(sqrt(-c)) of
 *     discriminant -c (m = 2, D = -c).
 * Other rows carry no discriminant data and skip the check.
 */
struct GeometricContext {
    Integer q;
    BoundValue bound;
};

std::optional<GeometricContext> geometric_context(const FieldRecord& record)
{
    const Integer& N = record.degree_N;
    if (mpz_odd_p(N.get_mpz_t())) {
        if (N > 2 && is_prime(N))
            return GeometricContext{N, class_number_bound({1, Integer(1)})};
        return std::nullopt;
    }
    if (record.family != Family::CyclotomicMinus && record.family != Family::Decimic)
        return std::nullopt;
    Integer half = N / 2;
    if (mpz_even_p(half.get_mpz_t()) || !is_prime(half))
        return std::nullopt;
    if (!record.conductor || !is_prime(*record.conductor) || *record.conductor % 4 != 3)
        return std::nullopt;
    return GeometricContext{half, class_number_bound({2, -*record.conductor})};
}

std::string escalate_detail(const char* check, const Verdict& verdict)
{
    return std::string(check) + " check failed: " + verdict.message();
}

bool label_less(const ReportRow& a, const ReportRow& b)
{
    if (a.family != b.family)
        return static_cast<int>(a.family) < static_cast<int>(b.family);
    if (a.label != b.label)
        return a.label < b.label;
    return a.p < b.p;
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

constexpr const char* report_header =
    "# class-number congruence verification report\n"
    "# bound convention: H_F of Eq. (1) uses the natural logarithm\n";

} // namespace

std::size_t VerificationReport::count(VerdictKind kind) const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(),
                      [kind](const ReportRow& row) { return row.verdict.kind() == kind; }));
}

bool VerificationReport::has_violation() const
{
    return count(VerdictKind::Violation) > 0;
}

std::vector<ReportRow> verify_record(const FieldRecord& record)
{
    std::vector<ReportRow> rows;
    if (record.class_total == 1)
        return rows;  /* h = 1: the theorems are vacuous */

    Factorization merged;
    for (const auto& item : record.class_items) {
        if (item.value == 1)
            continue;
        for (const auto& [p, e] : factor(item.value))
            merged.push(p, e);
    }

    std::optional<Integer> subfield_h;
    for (const auto& sub : record.subfields) {
        if (!subfield_h)
            subfield_h = Integer(1);
        *subfield_h *= sub.value.value;
    }

    auto geo = geometric_context(record);
    const bool odd_degree = mpz_odd_p(record.degree_N.get_mpz_t()) != 0;

    for (const auto& [p, e] : merged) {
        ReportRow row;
        row.family = record.family;
        row.label = record.label;
        row.p = p;
        row.e_p = e;

        RankData rank{p, e, std::nullopt};
        if (auto it = record.rank_annotations.find(p); it != record.rank_annotations.end())
            rank.r_p = it->second;
        row.r_used = rank.effective_rank();
        row.rank_assumed = !rank.r_p.has_value();

        if (record.odd_part_N1 == 1) {
            row.verdict = Verdict::inconclusive("degree has no odd part");
        } else {
            Theorem1Result t1 = analyze_theorem1(rank, record.odd_part_N1, subfield_h);
            row.verdict = t1.verdict;
            row.rank_uncertain = t1.rank_uncertain;
            row.subfield_checked = t1.subfield_checked;
            row.subfield_confirmed = t1.subfield_confirmed;
            if (t1.verdict.is_witness())
                row.witness = t1.verdict.witness_prime();
        }

        if (odd_degree && record.degree_N > 1)
            row.corollary = check_corollary_odd_degree(rank, record.degree_N);
        if (geo) {
            row.geometric = check_geometric(p, row.r_used, geo->q, geo->bound);
            row.geometric_q = geo->q;
        }

        if (row.corollary && row.corollary->is_violation() && !row.verdict.is_violation()) {
            row.verdict = Verdict::violation(escalate_detail("odd-degree corollary", *row.corollary));
            row.witness.reset();
        }
        if (row.geometric && row.geometric->is_violation() && !row.verdict.is_violation()) {
            row.verdict = Verdict::violation(escalate_detail("geometric", *row.geometric));
            row.witness.reset();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

VerificationReport verify_records(const std::vector<FieldRecord>& records)
{
    VerificationReport report;
    for (const FieldRecord& record : records) {
        auto rows = verify_record(record);
        report.rows.insert(report.rows.end(), std::make_move_iterator(rows.begin()),
                           std::make_move_iterator(rows.end()));
    }
    std::stable_sort(report.rows.begin(), report.rows.end(), label_less);
    return report;
}

namespace {

std::string summary_line(const VerificationReport& report)
{
    std::ostringstream out;
    out << "rows=" << report.rows.size()
        << " witness=" << report.count(VerdictKind::Witness)
        << " subfield_divisibility=" << report.count(VerdictKind::SubfieldDivisibility)
        << " inconclusive=" << report.count(VerdictKind::Inconclusive)
        << " violation=" << report.count(VerdictKind::Violation);
    return out.str();
}

} // namespace

std::string report_tsv(const VerificationReport& report)
{
    std::ostringstream out;
    out << report_header;
    out << "family\tlabel\tp\te_p\tr_used\trank_uncertain\tverdict\twitness\t"
           "subfield_confirmed\n";
    for (const ReportRow& row : report.rows) {
        out << to_string(row.family) << '\t' << row.label << '\t' << to_string(row.p) << '\t'
            << row.e_p << '\t' << row.r_used << '\t' << yes_no(row.rank_uncertain) << '\t'
            << to_string(row.verdict.kind()) << '\t'
            << (row.witness ? to_string(*row.witness) : std::string("-")) << '\t';
        if (row.verdict.kind() == VerdictKind::SubfieldDivisibility)
            out << yes_no(row.subfield_checked && row.subfield_confirmed);
        else
            out << '-';
        out << '\n';
    }
    out << "# summary: " << summary_line(report) << '\n';
    return out.str();
}

std::string report_text(const VerificationReport& report)
{
    std::ostringstream out;
    out << report_header;
    for (const ReportRow& row : report.rows) {
        out << to_string(row.family) << '/' << row.label << " p=" << to_string(row.p)
            << " e=" << row.e_p << " r=" << row.r_used << ": " << to_string(row.verdict);
        if (row.verdict.kind() == VerdictKind::SubfieldDivisibility)
            out << (row.subfield_confirmed ? " (confirmed)"
                                           : row.subfield_checked ? " (contradicted)"
                                                                  : " (unchecked)");
        if (row.rank_uncertain)
            out << " [rank-uncertain]";
        if (row.corollary)
            out << " | corollary: " << to_string(*row.corollary);
        if (row.geometric)
            out << " | geometric q=" << to_string(*row.geometric_q) << ": "
                << to_string(*row.geometric);
        out << '\n';
    }
    out << "summary: " << summary_line(report) << '\n';
    return out.str();
}

} // namespace classnum
