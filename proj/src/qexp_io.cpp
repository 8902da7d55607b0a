#include "siegel/qexp_io.hpp"

#include <fstream>
#include <sstream>

namespace siegel {

std::string qexp_to_text(const QExpansion& f) {
    std::ostringstream os;
    qexp_write(os, f);
    return os.str();
}

void qexp_write(std::ostream& os, const QExpansion& f) {
    os << "SIEGELQEXP v1 g=" << f.g() << " N=" << f.level() << " k=";
    if (f.weight())
        os << *f.weight();
    else
        os << "?";
    os << " ring=" << f.ring().to_string() << " tau=" << f.tau() << "\n";
    for (const auto& [n, c] : f.coeffs()) os << n.to_string() << " : " << c.to_string() << "\n";
}

namespace {

std::string expect_field(std::istringstream& is, const std::string& key) {
    std::string token;
    check(static_cast<bool>(is >> token), "ParseError", "truncated header");
    check(token.rfind(key + "=", 0) == 0, "ParseError", "expected header field " + key);
    return token.substr(key.size() + 1);
}

}  // namespace

QExpansion qexp_read(std::istream& is) {
    std::string line;
    check(static_cast<bool>(std::getline(is, line)), "ParseError", "empty input");
    std::istringstream header(line);
    std::string magic, version;
    header >> magic >> version;
    check(magic == "SIEGELQEXP" && version == "v1", "ParseError", "bad header magic");
    Int g = std::stoll(expect_field(header, "g"));
    Int level = std::stoll(expect_field(header, "N"));
    std::string kfield = expect_field(header, "k");
    std::optional<Int> weight;
    if (kfield != "?") weight = std::stoll(kfield);
    RingDesc ring = RingDesc::parse(expect_field(header, "ring"));
    Int tau = std::stoll(expect_field(header, "tau"));

    QExpansion f(g, level, weight, ring, tau);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(" : ");
        check(colon != std::string::npos, "ParseError", "term line needs ' : ' separator");
        std::istringstream idx(line.substr(0, colon));
        IMat doubled(g, g);
        for (Int i = 0; i < g; ++i)
            for (Int j = i; j < g; ++j) {
                Int v;
                check(static_cast<bool>(idx >> v), "ParseError", "short index line");
                doubled(i, j) = doubled(j, i) = v;
            }
        RingValue c = RingValue::parse(ring, line.substr(colon + 3));
        f.set_coefficient(FourierIndex::validate(doubled), c);
    }
    return f;
}

QExpansion qexp_from_text(const std::string& text) {
    std::istringstream is(text);
    return qexp_read(is);
}

QExpansion qexp_load(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), "FileError", "cannot open " + path);
    return qexp_read(in);
}

void qexp_save(const std::string& path, const QExpansion& f) {
    std::ofstream out(path);
    check(out.good(), "FileError", "cannot open " + path + " for writing");
    qexp_write(out, f);
}

}  // namespace siegel
