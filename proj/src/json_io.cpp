#include "fiberosc/json_io.hpp"

#include "fiberosc/errors.hpp"

namespace fiberosc {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::string str_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

Json to_json(const Rational& r) { return r.fraction_str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

Json to_json(const PLFunction& f) {
    Json pts = Json::array();
    for (const Breakpoint& p : f.breakpoints()) {
        pts.push_back({{"x", to_json(p.x)},
                       {"left", to_json(p.left)},
                       {"value", to_json(p.value)},
                       {"right", to_json(p.right)}});
    }
    return Json{{"breakpoints", std::move(pts)}};
}

PLFunction pl_from_json(const Json& j) {
    const Json& pts = field(j, "breakpoints");
    if (!pts.is_array()) throw ParseError("breakpoints must be an array");
    std::vector<Breakpoint> bps;
    for (const Json& p : pts) {
        bps.push_back({Rational::parse(str_field(p, "x")),
                       Rational::parse(str_field(p, "left")),
                       Rational::parse(str_field(p, "value")),
                       Rational::parse(str_field(p, "right"))});
    }
    try {
        return PLFunction(std::move(bps));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

namespace {

Json fiber_kind_entry(const Rational& at, const FiberKind& k) {
    Json e{{"at", to_json(at)}};
    switch (k.tag) {
        case FiberKind::Tag::Interval: e["kind"] = "interval"; break;
        case FiberKind::Tag::FiniteChain:
            e["kind"] = "chain";
            e["size"] = k.chain_size;
            break;
        case FiberKind::Tag::Singleton: e["kind"] = "singleton"; break;
    }
    return e;
}

FiberKind fiber_kind_from(const Json& e) {
    std::string kind = str_field(e, "kind");
    if (kind == "interval") return FiberKind::interval();
    if (kind == "singleton") return FiberKind::singleton();
    if (kind == "chain") {
        int size = 2;
        if (e.contains("size")) {
            if (!e.at("size").is_number_integer()) throw ParseError("chain size must be an integer");
            size = e.at("size").get<int>();
        }
        if (size < 2) throw ParseError("chain size must be >= 2");
        return FiberKind::chain(size);
    }
    throw ParseError("unknown fiber kind '" + kind + "'");
}

}  // namespace

Json to_json(const FiberedSpaceModel& m) {
    if (m == FiberedSpaceModel::lex_square()) return Json{{"model", "lex_square"}};
    if (m == FiberedSpaceModel::double_arrow()) return Json{{"model", "double_arrow"}};
    if (m == FiberedSpaceModel::double_circle()) return Json{{"model", "double_circle"}};
    if (m == FiberedSpaceModel::product_square()) return Json{{"model", "product_square"}};
    Json j{{"model", "custom"}};
    switch (m.mode) {
        case TopologyMode::Order: j["mode"] = "order"; break;
        case TopologyMode::Product: j["mode"] = "product"; break;
        case TopologyMode::DoubleCircle: j["mode"] = "double_circle"; break;
    }
    if (m.default_fiber.is_interval()) j["default"] = "interval";
    else if (m.default_fiber.is_singleton()) j["default"] = "singleton";
    else if (m.default_fiber.chain_size == 2) j["default"] = "chain2";
    else throw DomainError("space: only chain-2 defaults are serializable");
    Json fibers = Json::array();
    for (const auto& [at, k] : m.explicit_fibers) fibers.push_back(fiber_kind_entry(at, k));
    if (!fibers.empty()) j["fibers"] = std::move(fibers);
    return j;
}

FiberedSpaceModel space_from_json(const Json& j) {
    std::string model = str_field(j, "model");
    if (model == "lex_square") return FiberedSpaceModel::lex_square();
    if (model == "double_arrow") return FiberedSpaceModel::double_arrow();
    if (model == "double_circle") return FiberedSpaceModel::double_circle();
    if (model == "product_square") return FiberedSpaceModel::product_square();
    if (model != "custom") throw ParseError("unknown space model '" + model + "'");

    FiberedSpaceModel m;
    std::string mode = j.contains("mode") ? str_field(j, "mode") : "order";
    if (mode == "order") m.mode = TopologyMode::Order;
    else if (mode == "product") m.mode = TopologyMode::Product;
    else if (mode == "double_circle") m.mode = TopologyMode::DoubleCircle;
    else throw ParseError("unknown topology mode '" + mode + "'");

    std::string def = j.contains("default") ? str_field(j, "default") : "interval";
    if (def == "interval") m.default_fiber = FiberKind::interval();
    else if (def == "chain2") m.default_fiber = FiberKind::chain(2);
    else if (def == "singleton") m.default_fiber = FiberKind::singleton();
    else throw ParseError("unknown default fiber '" + def + "'");

    if (j.contains("fibers")) {
        const Json& fibers = j.at("fibers");
        if (!fibers.is_array()) throw ParseError("fibers must be an array");
        for (const Json& e : fibers) {
            Rational at = Rational::parse(str_field(e, "at"));
            m.explicit_fibers.emplace(m.canonical_base(at), fiber_kind_from(e));
        }
    }
    return m;
}

Json to_json(const RepresentableFunction& h) {
    Json j{{"space", to_json(h.space)}, {"base", to_json(h.base)}};
    Json fibers = Json::array();
    for (const auto& [at, fd] : h.fibers) {
        Json e{{"at", to_json(at)}};
        if (fd.pl) {
            e["pl"] = to_json(*fd.pl);
        } else {
            Json vals = Json::array();
            for (const Rational& v : fd.values) vals.push_back(to_json(v));
            e["values"] = std::move(vals);
        }
        fibers.push_back(std::move(e));
    }
    if (!fibers.empty()) j["fibers"] = std::move(fibers);
    if (!h.product_slope.is_zero()) j["slope"] = to_json(h.product_slope);
    return j;
}

RepresentableFunction function_from_json(const Json& j) {
    RepresentableFunction h;
    h.space = space_from_json(field(j, "space"));
    h.base = pl_from_json(field(j, "base"));
    if (j.contains("fibers")) {
        const Json& fibers = j.at("fibers");
        if (!fibers.is_array()) throw ParseError("fibers must be an array");
        for (const Json& e : fibers) {
            Rational at = h.space.canonical_base(Rational::parse(str_field(e, "at")));
            if (e.contains("pl")) {
                h.fibers.emplace(at, FiberData::interval(pl_from_json(e.at("pl"))));
            } else if (e.contains("values")) {
                const Json& vals = e.at("values");
                if (!vals.is_array()) throw ParseError("fiber values must be an array");
                std::vector<Rational> vs;
                for (const Json& v : vals) vs.push_back(rational_from_json(v));
                h.fibers.emplace(at, FiberData::chain(std::move(vs)));
            } else {
                throw ParseError("fiber entry needs 'pl' or 'values'");
            }
        }
    }
    if (j.contains("slope")) h.product_slope = rational_from_json(j.at("slope"));
    return h;
}

Json to_json(const SparseVector& v) {
    Json entries = Json::array();
    for (const auto& [i, val] : v.entries())
        entries.push_back({{"index", i}, {"value", to_json(val)}});
    return Json{{"entries", std::move(entries)}};
}

SparseVector vector_from_json(const Json& j) {
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("entries must be an array");
    SparseVector v;
    for (const Json& e : entries)
        v.set(str_field(e, "index"), Rational::parse(str_field(e, "value")));
    return v;
}

Json to_json(const std::vector<Violation>& v) {
    Json out = Json::array();
    for (const Violation& x : v)
        out.push_back({{"at", to_json(x.at)}, {"constraint", x.constraint}});
    return out;
}

Json to_json(const OscillationProfile& p) {
    if (p.is_infinite()) {
        return Json{{"infinite",
                     {{"interval", {to_json(p.infinite->interval.lo), to_json(p.infinite->interval.hi)}},
                      {"epsilon", to_json(p.infinite->epsilon)}}}};
    }
    Json support = Json::array();
    for (const auto& [y, v] : p.support)
        support.push_back({{"at", to_json(y)}, {"osc", to_json(v)}});
    return Json{{"support", std::move(support)}};
}

Json to_json(const LevelSet& s) {
    if (s.is_infinite()) {
        return Json{{"infinite",
                     {{"interval", {to_json(s.infinite->interval.lo), to_json(s.infinite->interval.hi)}},
                      {"epsilon", to_json(s.infinite->epsilon)}}}};
    }
    Json pts = Json::array();
    for (const Rational& y : s.points) pts.push_back(to_json(y));
    return Json{{"points", std::move(pts)}};
}

Json to_json(const C0Certificate& c) {
    Json j{{"member", c.member}};
    if (c.member) {
        Json chain = Json::array();
        for (const auto& [m, km] : c.chain) {
            Json pts = Json::array();
            for (const Rational& y : km) pts.push_back(to_json(y));
            chain.push_back({{"m", m}, {"K", std::move(pts)}});
        }
        j["chain"] = std::move(chain);
    } else if (c.witness) {
        j["witness"] = {{"interval", {to_json(c.witness->interval.lo), to_json(c.witness->interval.hi)}},
                        {"epsilon", to_json(c.witness->epsilon)}};
    }
    return j;
}

Json to_json(const BaseInterval& iv) {
    return Json{{"lo", to_json(iv.lo)},
                {"hi", to_json(iv.hi)},
                {"lo_closed", iv.lo_closed},
                {"hi_closed", iv.hi_closed}};
}

Json to_json(const BaseSubset& s) {
    Json ivs = Json::array();
    for (const BaseInterval& iv : s.intervals()) ivs.push_back(to_json(iv));
    Json pts = Json::array();
    for (const Rational& x : s.points()) pts.push_back(to_json(x));
    return Json{{"intervals", std::move(ivs)}, {"points", std::move(pts)}};
}

Json to_json(const OpenSet& u) {
    Json fulls = Json::array();
    for (const BaseInterval& iv : u.fulls) fulls.push_back(to_json(iv));
    Json pieces = Json::array();
    for (const FiberPiece& p : u.pieces) {
        Json e{{"at", to_json(p.at)}};
        if (const auto* span = std::get_if<FiberSpan>(&p.shape)) {
            e["span"] = Json{{"lo", to_json(span->lo)},
                             {"hi", to_json(span->hi)},
                             {"lo_closed", span->lo_closed},
                             {"hi_closed", span->hi_closed}};
        } else {
            Json idx = Json::array();
            for (int i : std::get<std::set<int>>(p.shape)) idx.push_back(i);
            e["indices"] = std::move(idx);
        }
        pieces.push_back(std::move(e));
    }
    Json rects = Json::array();
    for (const Rect& r : u.rects) {
        rects.push_back({{"base", to_json(r.base)},
                         {"span", Json{{"lo", to_json(r.span.lo)},
                                       {"hi", to_json(r.span.hi)},
                                       {"lo_closed", r.span.lo_closed},
                                       {"hi_closed", r.span.hi_closed}}}});
    }
    return Json{{"fulls", std::move(fulls)}, {"pieces", std::move(pieces)}, {"rects", std::move(rects)}};
}

Json to_json(const FullClosednessResult& r) {
    Json j{{"fully_closed", r.fully_closed}};
    if (r.fully_closed) {
        j["sampled"] = r.sampled;
        j["max_level_set_size"] = r.max_level_set_size;
    } else if (r.witness) {
        const NotFullyClosedWitness& w = *r.witness;
        j["witness"] = {
            {"A", {{"base", to_json(w.set_a.base)}, {"fiber_coord", to_json(w.set_a.fiber_coord)}}},
            {"B", {{"base", to_json(w.set_b.base)}, {"fiber_coord", to_json(w.set_b.fiber_coord)}}},
            {"separating", to_json(w.separating)},
            {"epsilon", to_json(w.epsilon)},
            {"common_image", to_json(w.common_image)}};
    }
    return j;
}

Json to_json(const QuotientModel& q) {
    Json keep = Json::array();
    for (const Rational& a : q.keep) keep.push_back(to_json(a));
    return Json{{"parent", to_json(q.parent)}, {"keep", std::move(keep)}, {"space", to_json(q.derived)}};
}

Json to_json(const TransferResult& t) {
    return Json{{"quotient", to_json(t.quotient)}, {"function", to_json(t.transferred)}};
}

Json to_json(const ApproximationPlan& p) {
    Json bridges = Json::array();
    for (const BridgeInfo& b : p.bridges) {
        bridges.push_back({{"at", to_json(b.at)},
                           {"interval", {to_json(b.lo), to_json(b.hi)}},
                           {"band", {to_json(b.band_lo), to_json(b.band_hi)}},
                           {"osc", to_json(b.osc)}});
    }
    return Json{{"p", to_json(p.result)},
                {"s", to_json(p.s)},
                {"c", to_json(p.c)},
                {"errorBound", to_json(p.error_bound)},
                {"achievedError", to_json(p.achieved_error)},
                {"bridges", std::move(bridges)}};
}

Json to_json(const DistBounds& d) {
    Json sched = Json::array();
    for (const auto& [c, err] : d.schedule)
        sched.push_back({{"c", to_json(c)}, {"achieved", to_json(err)}});
    return Json{{"lower", to_json(d.lower)},
                {"upper", to_json(d.upper)},
                {"s", to_json(d.s)},
                {"schedule", std::move(sched)}};
}

Json to_json(const ChainReport& c) {
    Json rows = Json::array();
    for (const ChainRow& r : c.rows) {
        Json keep = Json::array();
        for (const Rational& y : r.keep) keep.push_back(to_json(y));
        rows.push_back({{"m_from", r.m_from},
                        {"m_to", r.m_to},
                        {"K", std::move(keep)},
                        {"s", to_json(r.s)},
                        {"upper", to_json(r.upper)}});
    }
    return Json{{"rows", std::move(rows)},
                {"c_ref", to_json(c.c_ref)},
                {"exhaustion_m", c.exhaustion_m},
                {"exact_zero_at_exhaustion", c.exact_zero_at_exhaustion}};
}

Json to_json(const ProbeReport& p) {
    Json entries = Json::array();
    for (const ProbeEntry& e : p.entries) {
        entries.push_back({{"norm_sq", to_json(e.norm_sq)},
                           {"mid_norm_sq", to_json(e.mid_norm_sq)},
                           {"dev_inf", to_json(e.dev_inf)},
                           {"deficiency", to_json(e.deficiency)},
                           {"premise", e.premise},
                           {"modulus_sq", to_json(e.modulus_sq)},
                           {"union_support", e.union_support}});
    }
    return Json{{"tol", to_json(p.tol)},
                {"entries", std::move(entries)},
                {"empirical_modulus_sq", to_json(p.empirical_modulus_sq)},
                {"consistent", p.consistent}};
}

}  // namespace fiberosc
