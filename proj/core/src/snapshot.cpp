#include "mpns/snapshot.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "mpns/fft.hpp"

namespace mpns {
namespace {

constexpr char kMagic[8] = {'M', 'P', 'F', 'L', 'D', '\0', '\0', '\1'};

void write_components(const std::string& path, const Grid& g,
                      const std::vector<const ScalarField*>& fields,
                      const std::vector<std::string>& names, double time) {
    nlohmann::json header;
    header["n"] = g.n;
    header["box_length"] = g.box_length;
    header["components"] = names;
    header["time"] = time;
    const std::string htext = header.dump();
    if (htext.size() > 0xffffffffull)
        throw std::runtime_error("snapshot header too large");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("snapshot: cannot open " + path + " for writing");
    out.write(kMagic, sizeof kMagic);
    const uint32_t len = static_cast<uint32_t>(htext.size());
    char lenbuf[4];
    std::memcpy(lenbuf, &len, 4);  // little-endian host
    out.write(lenbuf, 4);
    out.write(htext.data(), static_cast<std::streamsize>(htext.size()));
    for (const ScalarField* f : fields) {
        auto s = f->samples();
        out.write(reinterpret_cast<const char*>(s.data()),
                  static_cast<std::streamsize>(s.size() * sizeof(double)));
    }
    if (!out) throw std::runtime_error("snapshot: short write to " + path);
}

struct Loaded {
    Grid grid;
    std::vector<std::string> names;
    std::vector<std::vector<double>> data;
    double time = 0.0;
};

Loaded read_components(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    char lenbuf[4];
    in.read(lenbuf, 4);
    uint32_t len = 0;
    std::memcpy(&len, lenbuf, 4);
    std::string htext(len, '\0');
    in.read(htext.data(), len);
    if (!in) throw std::runtime_error("snapshot: truncated header in " + path);
    const nlohmann::json header = nlohmann::json::parse(htext);

    Loaded out;
    out.grid = Grid(header.at("n").get<int>(), header.at("box_length").get<double>());
    out.time = header.at("time").get<double>();
    out.names = header.at("components").get<std::vector<std::string>>();
    const size_t count = static_cast<size_t>(out.grid.size());
    for (size_t c = 0; c < out.names.size(); ++c) {
        std::vector<double> buf(count);
        in.read(reinterpret_cast<char*>(buf.data()),
                static_cast<std::streamsize>(count * sizeof(double)));
        if (!in) throw std::runtime_error("snapshot: truncated data in " + path);
        out.data.push_back(std::move(buf));
    }
    return out;
}

}  // namespace

void write_state_snapshot(const std::string& path, const State& s) {
    const VectorField u = as_real(s.u);
    const VectorField w = as_real(s.w);
    write_components(path, u.grid(), {&u[0], &u[1], &u[2], &w[0], &w[1], &w[2]},
                     {"u1", "u2", "u3", "w1", "w2", "w3"}, s.t);
}

State read_state_snapshot(const std::string& path) {
    Loaded l = read_components(path);
    if (l.names.size() != 6)
        throw std::runtime_error("snapshot: expected 6 components for a state in " + path);
    State s;
    s.u = to_spectral(VectorField{{ScalarField::from_samples(l.grid, std::move(l.data[0])),
                                   ScalarField::from_samples(l.grid, std::move(l.data[1])),
                                   ScalarField::from_samples(l.grid, std::move(l.data[2]))}});
    s.w = to_spectral(VectorField{{ScalarField::from_samples(l.grid, std::move(l.data[3])),
                                   ScalarField::from_samples(l.grid, std::move(l.data[4])),
                                   ScalarField::from_samples(l.grid, std::move(l.data[5]))}});
    s.t = l.time;
    return s;
}

void write_field_snapshot(const std::string& path, const VectorField& v, double time) {
    const VectorField r = as_real(v);
    write_components(path, r.grid(), {&r[0], &r[1], &r[2]}, {"v1", "v2", "v3"}, time);
}

VectorField read_field_snapshot(const std::string& path, double* time) {
    Loaded l = read_components(path);
    if (l.names.size() != 3 && l.names.size() != 6)
        throw std::runtime_error("snapshot: expected 3 or 6 components in " + path);
    if (time) *time = l.time;
    return VectorField{{ScalarField::from_samples(l.grid, std::move(l.data[0])),
                        ScalarField::from_samples(l.grid, std::move(l.data[1])),
                        ScalarField::from_samples(l.grid, std::move(l.data[2]))}};
}

}  // namespace mpns
