#include "slab/field_io.hpp"
#include <fstream>
#include <json.hpp>

namespace slab {

namespace {

const char* magic = "SLABFIELD 1";

std::string rank_name(Rank r) {
    switch (r) {
        case Rank::scalar: return "scalar";
        case Rank::vector: return "vector";
        case Rank::matrix: return "matrix";
    }
    return "scalar";
}
Rank rank_from(const std::string& s) {
    if (s == "scalar") return Rank::scalar;
    if (s == "vector") return Rank::vector;
    if (s == "matrix") return Rank::matrix;
    throw std::runtime_error("snapshot: bad rank " + s);
}
std::string domain_name(Domain d) {
    switch (d) {
        case Domain::whole: return "whole_space";
        case Domain::half: return "half_space";
        case Domain::boundary: return "boundary";
    }
    return "whole_space";
}
Domain domain_from(const std::string& s) {
    if (s == "whole_space") return Domain::whole;
    if (s == "half_space") return Domain::half;
    if (s == "boundary") return Domain::boundary;
    throw std::runtime_error("snapshot: bad domain " + s);
}

} // namespace

void write_snapshot(const std::string& path, const Field& f) {
    nlohmann::json h;
    h["n"] = f.grid().n;
    h["box"] = std::vector<double>(f.grid().box.begin(), f.grid().box.begin() + f.grid().n);
    h["npts"] = std::vector<int>(f.grid().npts.begin(), f.grid().npts.begin() + f.grid().n);
    h["time"] = {{"t0", f.grid().time.t0}, {"t1", f.grid().time.t1}, {"nt", f.grid().time.nt}};
    h["rank"] = rank_name(f.rank());
    h["domain"] = domain_name(f.domain());
    h["state"] = f.state() == State::physical ? "physical" : "spectral";
    h["nt"] = f.nt();
    h["dtype"] = "complex64";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("snapshot: cannot write " + path);
    out << magic << "\n" << h.dump() << "\n";
    std::vector<float> buf(2 * f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        buf[2 * i] = static_cast<float>(f.data()[i].real());
        buf[2 * i + 1] = static_cast<float>(f.data()[i].imag());
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(float)));
}

Field read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    std::string line;
    std::getline(in, line);
    if (line != magic) throw std::runtime_error("snapshot: bad magic in " + path);
    std::getline(in, line);
    nlohmann::json h = nlohmann::json::parse(line);

    Grid g;
    g.n = h.at("n").get<int>();
    auto box = h.at("box").get<std::vector<double>>();
    auto npts = h.at("npts").get<std::vector<int>>();
    for (int a = 0; a < g.n; ++a) {
        g.box[a] = box.at(a);
        g.npts[a] = npts.at(a);
    }
    g.time.t0 = h.at("time").at("t0").get<double>();
    g.time.t1 = h.at("time").at("t1").get<double>();
    g.time.nt = h.at("time").at("nt").get<int>();

    Field f(g, rank_from(h.at("rank")), domain_from(h.at("domain")), h.at("nt").get<int>(),
            h.at("state") == "physical" ? State::physical : State::spectral);
    std::vector<float> buf(2 * f.size());
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!in) throw std::runtime_error("snapshot: truncated body in " + path);
    for (std::size_t i = 0; i < f.size(); ++i)
        f.data()[i] = cplx(buf[2 * i], buf[2 * i + 1]);
    return f;
}

void export_csv_slice(const std::string& path, const Field& f, int t, int c, int axis,
                      const std::vector<int>& fixed) {
    if (axis < 0 || axis >= f.nspatial()) throw std::runtime_error("csv slice: bad axis");
    if (static_cast<int>(fixed.size()) != f.nspatial() - 1)
        throw std::runtime_error("csv slice: need one fixed index per remaining axis");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("csv slice: cannot write " + path);
    out << "coord,re,im\n";
    std::vector<int> ix(f.nspatial());
    int fpos = 0;
    for (int a = 0; a < f.nspatial(); ++a)
        if (a != axis) ix[a] = fixed[fpos++];
    char buf[96];
    for (int i = 0; i < f.extents()[axis]; ++i) {
        ix[axis] = i;
        cplx v = f.at(t, c, f.flat_index(ix.data()));
        double coord = f.grid().spacing(axis) * i;
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", coord, v.real(), v.imag());
        out << buf;
    }
}

} // namespace slab
