#include "etaq/claims.hpp"

namespace etaq {

std::vector<const Claim*> ClaimFile::claims() const {
    std::vector<const Claim*> out;
    for (const auto& st : statements)
        if (const Claim* c = std::get_if<Claim>(&st))
            out.push_back(c);
    return out;
}

std::vector<const SeriesDef*> ClaimFile::defs() const {
    std::vector<const SeriesDef*> out;
    for (const auto& st : statements)
        if (const SeriesDef* d = std::get_if<SeriesDef>(&st))
            out.push_back(d);
    return out;
}

namespace {

void render_prog(const Progression& p, std::string& out) {
    out += std::to_string(p.step);
    out += "*n";
    if (p.offset > 0) {
        out += "+";
        out += std::to_string(p.offset);
    } else if (p.offset < 0) {
        out += std::to_string(p.offset);
    }
}

} // namespace

std::string render(const ClaimFile& file) {
    std::string out;
    for (const auto& st : file.statements) {
        if (const SeriesDef* d = std::get_if<SeriesDef>(&st)) {
            out += "series " + d->name + " = " + render(d->expr) + "\n";
            continue;
        }
        const Claim& c = std::get<Claim>(st);
        if (const auto* id = std::get_if<IdentityClaim>(&c.body)) {
            out += "identity \"" + c.label + "\": " + render(id->lhs) +
                   " == " + render(id->rhs) + "\n";
        } else if (const auto* v = std::get_if<VanishingClaim>(&c.body)) {
            out += "congruence \"" + c.label + "\": " + v->series + "[";
            render_prog(v->prog, out);
            out += "] == 0 mod " + v->modulus.get_str() + "\n";
        } else if (const auto* in = std::get_if<InternalClaim>(&c.body)) {
            out += "internal \"" + c.label + "\": " + in->lhs_series + "[";
            render_prog(in->lhs, out);
            out += "] == " + in->rhs_series + "[";
            render_prog(in->rhs, out);
            out += "] mod " + in->modulus.get_str() + "\n";
        }
    }
    return out;
}

} // namespace etaq
