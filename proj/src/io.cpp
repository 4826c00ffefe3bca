#include "eisring/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace eisring::io {

using nlohmann::ordered_json;

namespace {

std::string fixed(double v, int places)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

ordered_json pair_json(const Eisenstein& x) { return ordered_json::array({x.a, x.b}); }

ordered_json optional_json(const std::optional<Int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::array<double, 2> plane(const Eisenstein& p)
{
    return {static_cast<double>(p.a) - 0.5 * static_cast<double>(p.b), std::sqrt(3.0) / 2.0 * static_cast<double>(p.b)};
}

// Pads by code points so that the multibyte rho keeps columns aligned.
std::string pad(std::string s, std::size_t width)
{
    const auto shown = static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
    if (shown < width)
        s.append(width - shown, ' ');
    return s;
}

// Hue spread over the circle, fixed saturation and lightness.
std::string palette(std::size_t i, std::size_t n)
{
    const double hue = 360.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1));
    return "hsl(" + fixed(hue, 1) + ",70%,45%)";
}

struct Dot {
    std::array<double, 2> at;
    std::string color;
    std::string title;
};

std::string scatter_svg(const std::vector<Dot>& dots, const std::string& caption)
{
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& d : dots) {
        min_x = std::min(min_x, d.at[0]);
        max_x = std::max(max_x, d.at[0]);
        min_y = std::min(min_y, d.at[1]);
        max_y = std::max(max_y, d.at[1]);
    }
    const double s = lattice_spacing, margin = s;
    const double w = (max_x - min_x) * s + 2 * margin;
    const double h = (max_y - min_y) * s + 2 * margin;
    // y grows upward in the plane and downward in SVG.
    auto sx = [&](double x) { return fixed((x - min_x) * s + margin, 3); };
    auto sy = [&](double y) { return fixed((max_y - y) * s + margin, 3); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w, 3) << "\" height=\"" << fixed(h, 3)
       << "\" viewBox=\"0 0 " << fixed(w, 3) << ' ' << fixed(h, 3) << "\">\n"
       << "  <title>" << caption << "</title>\n"
       << "  <line x1=\"" << sx(min_x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_x) << "\" y2=\"" << sy(0)
       << "\" stroke=\"#ccc\"/>\n"
       << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(min_y) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(max_y)
       << "\" stroke=\"#ccc\"/>\n";
    for (const auto& d : dots)
        os << "  <circle cx=\"" << sx(d.at[0]) << "\" cy=\"" << sy(d.at[1]) << "\" r=\"6\" fill=\"" << d.color
           << "\"><title>" << d.title << "</title></circle>\n";
    os << "</svg>\n";
    return os.str();
}

ordered_json node_json(const PartitionNode& n)
{
    ordered_json j;
    j["label"] = n.label;
    j["offset"] = pair_json(n.offset);
    j["step"] = n.step;
    j["bound_d2"] = n.bound_d2;
    j["size"] = n.points.size();
    j["min_d2"] = optional_json(n.min_d2);
    j["min_dhex"] = optional_json(n.min_dhex);
    ordered_json pts = ordered_json::array();
    for (const auto& p : n.points)
        pts.push_back(pair_json(p));
    j["points"] = std::move(pts);
    ordered_json kids = ordered_json::array();
    for (const auto& c : n.children)
        kids.push_back(node_json(c));
    j["children"] = std::move(kids);
    return j;
}

void node_text(std::ostringstream& os, const PartitionNode& n, int depth)
{
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "coset [";
    for (std::size_t i = 0; i < n.label.size(); ++i)
        os << (i ? "," : "") << n.label[i];
    os << "] offset " << to_string(n.offset) << " size " << n.points.size() << " d2 "
       << (n.min_d2 ? std::to_string(*n.min_d2) : "inf") << " dhex "
       << (n.min_dhex ? std::to_string(*n.min_dhex) : "inf") << " bound " << n.bound_d2 << '\n';
    for (const auto& c : n.children)
        node_text(os, c, depth + 1);
}

const char* kind_name(ConstellationKind k) { return k == ConstellationKind::Eisenstein ? "eisenstein" : "gaussian"; }

std::string modulus_name(const Constellation& c)
{
    return c.kind == ConstellationKind::Eisenstein ? to_string(Eisenstein{c.modulus.first, c.modulus.second})
                                                   : to_string(Gaussian{c.modulus.first, c.modulus.second});
}

const std::array<const char*, 6> energy_columns{"E_G", "E_E", "E2_G", "E2_E", "EM_G", "EHex_E"};

} // namespace

std::string residue_table_text(const ResidueSystem& rs)
{
    std::ostringstream os;
    os << "# E_" << to_string(rs.modulus.eta) << ": " << rs.size() << " classes\n";
    for (std::size_t i = 0; i < rs.size(); ++i)
        os << pad(to_string(rs.r_points[i]), 12) << " -> " << to_string(rs.e_points[i]) << '\n';
    return os.str();
}

std::string residue_table_csv(const ResidueSystem& rs)
{
    std::ostringstream os;
    os << "x,y,re_rep_a,re_rep_b\n";
    for (std::size_t i = 0; i < rs.size(); ++i)
        os << rs.r_points[i].a << ',' << rs.r_points[i].b << ',' << rs.e_points[i].a << ',' << rs.e_points[i].b << '\n';
    return os.str();
}

std::string residue_table_json(const ResidueSystem& rs)
{
    ordered_json j;
    j["schema"] = schema;
    j["modulus"] = pair_json(rs.modulus.eta);
    j["working_modulus"] = pair_json(rs.modulus.working_eta);
    j["t"] = rs.modulus.t;
    j["size"] = rs.size();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < rs.size(); ++i)
        rows.push_back({{"grid", pair_json(rs.r_points[i])}, {"rep", pair_json(rs.e_points[i])}});
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string energy_table_text(const std::vector<ComparisonRow>& rows)
{
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-10s %-10s %5s %7s %7s %7s %7s %7s %7s\n", "gaussian", "eisenstein", "size", "E_G",
                  "E_E", "E2_G", "E2_E", "EM_G", "EHex_E");
    os << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, " %5lld", static_cast<long long>(r.size));
        os << pad(to_string(r.gaussian), 10) << ' ' << pad(to_string(r.eisenstein), 10) << buf;
        for (Int h : r.hundredths) {
            std::snprintf(buf, sizeof buf, " %7s", format_hundredths(h).c_str());
            os << buf;
        }
        os << '\n';
    }
    return os.str();
}

std::string energy_table_csv(const std::vector<ComparisonRow>& rows)
{
    std::ostringstream os;
    os << "gaussian_a,gaussian_b,eisenstein_a,eisenstein_b,size";
    for (const char* c : energy_columns)
        os << ',' << c;
    os << '\n';
    for (const auto& r : rows) {
        os << r.gaussian.a << ',' << r.gaussian.b << ',' << r.eisenstein.a << ',' << r.eisenstein.b << ',' << r.size;
        for (Int h : r.hundredths)
            os << ',' << format_hundredths(h);
        os << '\n';
    }
    return os.str();
}

std::string energy_table_json(const std::vector<ComparisonRow>& rows)
{
    ordered_json j;
    j["schema"] = schema;
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["gaussian"] = ordered_json::array({r.gaussian.a, r.gaussian.b});
        row["eisenstein"] = pair_json(r.eisenstein);
        row["size"] = r.size;
        for (std::size_t k = 0; k < energy_columns.size(); ++k)
            row[energy_columns[k]] = format_hundredths(r.hundredths[k]);
        out.push_back(std::move(row));
    }
    j["rows"] = std::move(out);
    return j.dump(2) + "\n";
}

std::string partition_text(const PartitionNode& root)
{
    std::ostringstream os;
    node_text(os, root, 0);
    return os.str();
}

std::string partition_json(const PartitionNode& root, const Modulus& mod)
{
    ordered_json j;
    j["schema"] = schema;
    j["modulus"] = pair_json(mod.eta);
    j["working_modulus"] = pair_json(mod.working_eta);
    j["t"] = mod.t;
    j["leaves"] = root.leaf_count();
    j["root"] = node_json(root);
    return j.dump(2) + "\n";
}

std::string partition_svg(const PartitionNode& root)
{
    std::vector<Dot> dots;
    const std::size_t n = root.children.size();
    if (n == 0) {
        for (const auto& p : root.points)
            dots.push_back({plane(p), palette(0, 1), to_string(p)});
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& c = root.children[i];
            for (const auto& p : c.points)
                dots.push_back({plane(p), palette(i, n),
                                to_string(p) + " coset " + std::to_string(i) + " d2 " +
                                    (c.min_d2 ? std::to_string(*c.min_d2) : "inf")});
        }
    }
    return scatter_svg(dots, std::to_string(n == 0 ? 1 : n) + " cosets");
}

std::string constellation_text(const Constellation& c, const EnergyReport& r)
{
    std::ostringstream os;
    os << kind_name(c.kind) << ' ' << modulus_name(c) << " size " << c.size() << '\n'
       << "E " << fixed(r.mean_abs, 4) << '\n'
       << "E2 " << r.mean_sq.num << '/' << r.mean_sq.den << " = " << fixed(r.mean_sq.to_double(), 4) << '\n'
       << (c.kind == ConstellationKind::Eisenstein ? "EHex " : "EM ") << r.mean_weight.num << '/'
       << r.mean_weight.den << " = " << fixed(r.mean_weight.to_double(), 4) << '\n'
       << "class_weight " << r.mean_class_weight.num << '/' << r.mean_class_weight.den << " = "
       << fixed(r.mean_class_weight.to_double(), 4) << '\n'
       << "min_d2 " << (r.min_d2 ? std::to_string(*r.min_d2) : "inf") << '\n'
       << "min_weight_distance " << (r.min_weight_distance ? std::to_string(*r.min_weight_distance) : "inf") << '\n';
    return os.str();
}

std::string constellation_csv(const Constellation& c)
{
    std::ostringstream os;
    os << "re,im\n";
    for (const auto& p : c.cartesian())
        os << fixed(p[0], 6) << ',' << fixed(p[1], 6) << '\n';
    return os.str();
}

std::string constellation_json(const Constellation& c, const EnergyReport& r)
{
    ordered_json j;
    j["schema"] = schema;
    j["kind"] = kind_name(c.kind);
    j["modulus"] = ordered_json::array({c.modulus.first, c.modulus.second});
    j["size"] = c.size();
    j["E"] = r.mean_abs;
    j["E2"] = {{"num", r.mean_sq.num}, {"den", r.mean_sq.den}};
    j["E_weight"] = {{"num", r.mean_weight.num}, {"den", r.mean_weight.den}};
    j["E_class_weight"] = {{"num", r.mean_class_weight.num}, {"den", r.mean_class_weight.den}};
    j["min_d2"] = optional_json(r.min_d2);
    j["min_weight_distance"] = optional_json(r.min_weight_distance);
    ordered_json pts = ordered_json::array();
    if (c.kind == ConstellationKind::Eisenstein)
        for (const auto& p : c.eis_points)
            pts.push_back(pair_json(p));
    else
        for (const auto& p : c.gauss_points)
            pts.push_back(ordered_json::array({p.a, p.b}));
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

std::string constellation_svg(const Constellation& c)
{
    std::vector<Dot> dots;
    const auto xy = c.cartesian();
    for (std::size_t i = 0; i < xy.size(); ++i) {
        const std::string label =
            c.kind == ConstellationKind::Eisenstein ? to_string(c.eis_points[i]) : to_string(c.gauss_points[i]);
        dots.push_back({xy[i], "#1f5fa8", label});
    }
    return scatter_svg(dots, std::string(kind_name(c.kind)) + " " + modulus_name(c));
}

std::string codewords_csv(const std::vector<Word>& words)
{
    std::ostringstream os;
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i)
            os << (i ? "," : "") << to_string(w[i]);
        os << '\n';
    }
    return os.str();
}

} // namespace eisring::io
