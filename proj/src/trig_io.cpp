#include "zmono/trig_io.hpp"

#include <fstream>
#include <sstream>

namespace zmono {

Triangulation read_trig(std::istream& in) {
    std::vector<std::array<VertexLabel, 3>> faces;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::array<VertexLabel, 3> f;
        std::string extra;
        if (!(tokens >> f[0])) continue;  // blank line
        if (!(tokens >> f[1] >> f[2]) || (tokens >> extra)) {
            throw DomainError(ErrorKind::TrigParse,
                              "line " + std::to_string(line_no) + ": expected exactly three vertex labels");
        }
        faces.push_back(std::move(f));
    }
    if (faces.empty()) throw DomainError(ErrorKind::TrigParse, "no faces found");
    return Triangulation::build(faces);
}

Triangulation read_trig_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError(ErrorKind::TrigParse, "cannot open '" + path + "'");
    return read_trig(in);
}

Triangulation parse_trig(const std::string& text) {
    std::istringstream in(text);
    return read_trig(in);
}

std::string to_trig(const Triangulation& t) {
    std::ostringstream out;
    for (const auto& f : t.face_list()) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    return out.str();
}

void write_trig_file(const Triangulation& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError(ErrorKind::TrigParse, "cannot open '" + path + "' for writing");
    out << to_trig(t);
}

}  // namespace zmono
