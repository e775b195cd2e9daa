#include "hncomb/rootdata.hpp"

#include "hncomb/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hncomb {

int GroupSpec::semisimple_rank() const {
    int total = 0;
    for (const auto& f : factors)
        total += f.rank;
    return total;
}

std::string GroupSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            out << 'x';
        out << static_cast<char>(factors[i].type) << factors[i].rank;
    }
    if (isogeny == Isogeny::Adjoint)
        out << " ad";
    if (central_rank > 0)
        out << "+Z" << central_rank;
    return out.str();
}

namespace {

void validate_factor(const Factor& f) {
    const int r = f.rank;
    bool ok = false;
    switch (f.type) {
        case SimpleType::A: ok = r >= 1; break;
        case SimpleType::B: ok = r >= 2; break;
        case SimpleType::C: ok = r >= 2; break;
        case SimpleType::D: ok = r >= 3; break;
        case SimpleType::E: ok = r >= 6 && r <= 8; break;
        case SimpleType::F: ok = r == 4; break;
        case SimpleType::G: ok = r == 2; break;
    }
    if (!ok)
        throw ParseError(std::string("invalid rank ") + std::to_string(r) + " for type " +
                         static_cast<char>(f.type));
}

std::string trimmed(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos)
        return "";
    auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

int parse_small_int(const std::string& s, const char* what) {
    if (s.empty())
        throw ParseError(std::string("missing ") + what);
    for (char c : s)
        if (c < '0' || c > '9')
            throw ParseError(std::string("bad ") + what + " '" + s + "'");
    if (s.size() > 4)
        throw ParseError(std::string(what) + " out of range: '" + s + "'");
    return std::stoi(s);
}

// Small integer Cartan matrix of a single simple factor, convention:
// entry (i, j) = value of simple root i on simple coroot j.
std::vector<std::vector<int>> factor_cartan(const Factor& f) {
    const int n = f.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    auto bond = [&](int i, int j, int down = -1, int up = -1) {
        a[i][j] = down;
        a[j][i] = up;
    };
    switch (f.type) {
        case SimpleType::A:
            for (int i = 0; i + 1 < n; ++i)
                bond(i, i + 1);
            break;
        case SimpleType::B:
            for (int i = 0; i + 2 < n; ++i)
                bond(i, i + 1);
            bond(n - 2, n - 1, -2, -1);  // last simple root short
            break;
        case SimpleType::C:
            for (int i = 0; i + 2 < n; ++i)
                bond(i, i + 1);
            bond(n - 2, n - 1, -1, -2);  // last simple root long
            break;
        case SimpleType::D:
            for (int i = 0; i + 3 < n; ++i)
                bond(i, i + 1);
            bond(n - 3, n - 2);
            bond(n - 3, n - 1);
            break;
        case SimpleType::E:
            // chain 0-2-3-4-... with the extra node 1 attached to node 3
            bond(0, 2);
            bond(1, 3);
            for (int i = 2; i + 1 < n; ++i)
                bond(i, i + 1);
            break;
        case SimpleType::F:
            bond(0, 1);
            bond(1, 2, -2, -1);
            bond(2, 3);
            break;
        case SimpleType::G:
            bond(0, 1, -1, -3);
            break;
    }
    return a;
}

std::vector<std::vector<int>> integer_cartan(const GroupData& g) {
    std::vector<std::vector<int>> a(g.rank, std::vector<int>(g.rank, 0));
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j)
            a[i][j] = static_cast<int>(numerator(g.cartan.at(i, j)));
    return a;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& raw) {
    std::string text = trimmed(raw);
    if (text.empty())
        throw ParseError("empty group spec");

    GroupSpec spec;
    auto plus = text.rfind("+Z");
    if (plus != std::string::npos) {
        spec.central_rank = parse_small_int(text.substr(plus + 2), "central rank");
        text = text.substr(0, plus);
    }
    auto space = text.find(' ');
    if (space != std::string::npos) {
        const std::string iso = trimmed(text.substr(space + 1));
        if (iso == "sc")
            spec.isogeny = Isogeny::SimplyConnected;
        else if (iso == "ad")
            spec.isogeny = Isogeny::Adjoint;
        else
            throw ParseError("unknown isogeny '" + iso + "' (expected sc or ad)");
        text = text.substr(0, space);
    }

    std::size_t pos = 0;
    while (pos < text.size()) {
        const char letter = text[pos];
        if (letter < 'A' || letter > 'G')
            throw ParseError(std::string("bad factor letter '") + letter + "' in group spec");
        ++pos;
        std::size_t digits = pos;
        while (digits < text.size() && text[digits] >= '0' && text[digits] <= '9')
            ++digits;
        Factor f{static_cast<SimpleType>(letter), parse_small_int(text.substr(pos, digits - pos), "rank")};
        validate_factor(f);
        spec.factors.push_back(f);
        pos = digits;
        if (pos < text.size()) {
            if (text[pos] != 'x')
                throw ParseError("expected 'x' between factors in group spec");
            ++pos;
            if (pos == text.size())
                throw ParseError("trailing 'x' in group spec");
        }
    }
    if (spec.factors.empty())
        throw ParseError("group spec needs at least one simple factor");
    return spec;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
    if (a.pairings.size() != b.pairings.size() || a.central.size() != b.central.size())
        throw DomainError("coweight addition: dimension mismatch");
    Coweight out = a;
    for (std::size_t i = 0; i < b.pairings.size(); ++i)
        out.pairings[i] += b.pairings[i];
    for (std::size_t i = 0; i < b.central.size(); ++i)
        out.central[i] += b.central[i];
    return out;
}

Coweight operator-(const Coweight& a, const Coweight& b) {
    if (a.pairings.size() != b.pairings.size() || a.central.size() != b.central.size())
        throw DomainError("coweight subtraction: dimension mismatch");
    Coweight out = a;
    for (std::size_t i = 0; i < b.pairings.size(); ++i)
        out.pairings[i] -= b.pairings[i];
    for (std::size_t i = 0; i < b.central.size(); ++i)
        out.central[i] -= b.central[i];
    return out;
}

Coweight operator*(const Rat& scalar, const Coweight& cw) {
    Coweight out = cw;
    for (auto& p : out.pairings)
        p *= scalar;
    for (auto& c : out.central)
        c *= scalar;
    return out;
}

bool Root::is_positive() const {
    for (int c : coefs)
        if (c > 0)
            return true;
    return false;
}

bool Root::is_simple() const {
    int ones = 0;
    for (int c : coefs) {
        if (c == 1)
            ++ones;
        else if (c != 0)
            return false;
    }
    return ones == 1;
}

Root Root::negated() const {
    Root out = *this;
    for (int& c : out.coefs)
        c = -c;
    return out;
}

int Root::height() const {
    int h = 0;
    for (int c : coefs)
        h += c;
    return h;
}

GroupData build_group(const GroupSpec& spec) {
    for (const auto& f : spec.factors)
        validate_factor(f);
    if (spec.central_rank < 0)
        throw DomainError("central rank must be nonnegative");

    GroupData g;
    g.spec = spec;
    g.rank = spec.semisimple_rank();
    g.central_rank = spec.central_rank;

    g.cartan = RatMatrix(g.rank, g.rank);
    int offset = 0;
    for (const auto& f : spec.factors) {
        const auto block = factor_cartan(f);
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j)
                g.cartan.at(offset + i, offset + j) = block[i][j];
        offset += f.rank;
    }

    auto inv = invert(g.cartan);
    if (!inv)
        throw DomainError("degenerate Cartan matrix");  // cannot happen for valid specs
    g.cartan_inverse = *inv;

    // sc: the simple coroots; ad: the fundamental coweights (unit pairing
    // vectors); the central block is always the standard lattice.
    g.lattice_basis = RatMatrix(g.dim(), g.dim());
    for (int j = 0; j < g.rank; ++j)
        for (int i = 0; i < g.rank; ++i)
            g.lattice_basis.at(i, j) =
                spec.isogeny == Isogeny::SimplyConnected ? g.cartan.at(i, j) : Rat(i == j ? 1 : 0);
    for (int k = 0; k < g.central_rank; ++k)
        g.lattice_basis.at(g.rank + k, g.rank + k) = 1;
    return g;
}

std::vector<Root> enumerate_roots(const GroupData& group) {
    const auto cartan = integer_cartan(group);
    const int r = group.rank;

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < r; ++i) {
        std::vector<int> simple(r, 0);
        simple[i] = 1;
        seen.insert(simple);
        queue.push_back(simple);
        for (int& c : simple)
            c = -c;
        seen.insert(simple);
        queue.push_back(simple);
    }
    // orbit of the simple roots under the simple reflections
    while (!queue.empty()) {
        const auto current = queue.back();
        queue.pop_back();
        for (int j = 0; j < r; ++j) {
            int pairing = 0;  // value of the root on the j-th simple coroot
            for (int i = 0; i < r; ++i)
                pairing += current[i] * cartan[i][j];
            auto reflected = current;
            reflected[j] -= pairing;
            if (seen.insert(reflected).second)
                queue.push_back(reflected);
        }
    }

    std::vector<Root> positives;
    for (const auto& coefs : seen) {
        Root root{coefs};
        if (root.is_positive())
            positives.push_back(std::move(root));
    }
    std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height())
            return a.height() < b.height();
        return a.coefs < b.coefs;
    });
    std::vector<Root> all = positives;
    for (const auto& root : positives)
        all.push_back(root.negated());
    return all;
}

std::vector<Root> levi_roots(const GroupData& group, const std::vector<int>& gamma_m) {
    validate_subset(gamma_m, group.rank);
    std::vector<bool> inside(group.rank, false);
    for (int i : gamma_m)
        inside[i] = true;
    std::vector<Root> out;
    for (const auto& root : enumerate_roots(group)) {
        bool supported = true;
        for (int i = 0; i < group.rank; ++i)
            if (root.coefs[i] != 0 && !inside[i]) {
                supported = false;
                break;
            }
        if (supported)
            out.push_back(root);
    }
    return out;
}

long expected_root_count(SimpleType type, int rank) {
    const long n = rank;
    switch (type) {
        case SimpleType::A: return n * (n + 1);
        case SimpleType::B:
        case SimpleType::C: return 2 * n * n;
        case SimpleType::D: return 2 * n * (n - 1);
        case SimpleType::E: return rank == 6 ? 72 : rank == 7 ? 126 : 240;
        case SimpleType::F: return 48;
        case SimpleType::G: return 12;
    }
    return 0;
}

Coweight zero_coweight(const GroupData& group) {
    return Coweight{RatVec(group.rank), RatVec(group.central_rank)};
}

Coweight simple_coroot(const GroupData& group, int index) {
    if (index < 0 || index >= group.rank)
        throw DomainError("simple coroot index out of range");
    Coweight cw = zero_coweight(group);
    for (int i = 0; i < group.rank; ++i)
        cw.pairings[i] = group.cartan.at(i, index);
    return cw;
}

Rat pair_with_root(const Coweight& cw, const Root& root) {
    if (root.coefs.size() != cw.pairings.size())
        throw DomainError("pair_with_root: dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < root.coefs.size(); ++i)
        if (root.coefs[i] != 0)
            acc += Rat(root.coefs[i]) * cw.pairings[i];
    return acc;
}

namespace {

RatVec parse_rational_list(const std::string& text) {
    RatVec out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        out.push_back(parse_rational(trimmed(text.substr(pos, comma - pos))));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Coweight parse_coweight(const std::string& text, const GroupData& group) {
    auto semi = text.find(';');
    Coweight cw;
    cw.pairings = parse_rational_list(semi == std::string::npos ? text : text.substr(0, semi));
    if (semi != std::string::npos)
        cw.central = parse_rational_list(text.substr(semi + 1));
    if (static_cast<int>(cw.pairings.size()) != group.rank)
        throw ParseError("coweight has " + std::to_string(cw.pairings.size()) + " pairing coordinates, expected " +
                         std::to_string(group.rank));
    if (static_cast<int>(cw.central.size()) != group.central_rank)
        throw ParseError("coweight has " + std::to_string(cw.central.size()) + " central coordinates, expected " +
                         std::to_string(group.central_rank));
    return cw;
}

std::string coweight_to_string(const Coweight& cw) {
    std::string out = vec_to_string(cw.pairings);
    if (!cw.central.empty())
        out += ";" + vec_to_string(cw.central);
    return out;
}

std::vector<int> parse_subset(const std::string& text, int rank) {
    std::vector<int> subset;
    const std::string body = trimmed(text);
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        const std::string item = trimmed(body.substr(pos, comma - pos));
        const int index = parse_small_int(item, "vertex index");
        if (index < 1 || index > rank)
            throw ParseError("vertex index " + item + " out of range 1.." + std::to_string(rank));
        subset.push_back(index - 1);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw ParseError("duplicate vertex index in subset");
    return subset;
}

std::string subset_to_string(const std::vector<int>& subset) {
    std::ostringstream out;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i)
            out << ',';
        out << subset[i] + 1;
    }
    return out.str();
}

void validate_subset(const std::vector<int>& subset, int rank) {
    int last = -1;
    for (int i : subset) {
        if (i <= last || i >= rank)
            throw DomainError("subset of Gamma must be sorted, unique and in range");
        last = i;
    }
}

void require_same_shape(const GroupData& group, const Coweight& cw, const char* where) {
    if (static_cast<int>(cw.pairings.size()) != group.rank ||
        static_cast<int>(cw.central.size()) != group.central_rank)
        throw DomainError(std::string(where) + ": coweight does not match the group dimensions");
}

}  // namespace hncomb
