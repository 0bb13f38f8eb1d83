#pragma once

// Line-oriented text formats. A file is a sequence of blocks
//
//   KIND v1 [name]
//   ...
//   end
//
// with '#' comments. Blocks refer to earlier blocks by name. See
// docs/formats.md for the grammar of each kind.

#include "diagrams.hpp"
#include "gluing.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sset {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// A functor together with its source and target.
struct TypedFunctor {
    FiniteCategory source, target;
    Functor functor;
    friend bool operator==(const TypedFunctor&, const TypedFunctor&) = default;
};

struct TypedNaturalIso {
    TypedFunctor from, to;
    NaturalTransformation eta;
    friend bool operator==(const TypedNaturalIso&, const TypedNaturalIso&) = default;
};

/// An m-simplex of the global sections of a diagram, as one simplex per object.
struct Section {
    SSetDiagram diagram;
    int dim = 0;
    std::vector<int> family;
    friend bool operator==(const Section&, const Section&) = default;
};

/// Map[K, C] at value bound E, stored by its inputs.
struct MappingEntry {
    SimplicialSet base, target;
    int value_bound = 0;
    MappingFunctor functor;
    friend bool operator==(const MappingEntry& a, const MappingEntry& b)
    {
        return a.base == b.base && a.target == b.target && a.value_bound == b.value_bound;
    }
};

inline bool operator==(const GluingInstance& a, const GluingInstance& b)
{
    return a.geo == b.geo && a.values == b.values;
}

using WorkspaceEntry = std::variant<SimplicialSet, MarkedSimplicialSet, SimplicialMap, FiniteCategory, TypedFunctor,
                                    TypedNaturalIso, SSetDiagram, DiagramMap, Section, MappingEntry, GluingInstance>;

/// Named objects read from text, in file order.
class Workspace {
public:
    void add(const std::string& name, WorkspaceEntry e)
    {
        if (entries_.count(name))
            throw std::invalid_argument("workspace: duplicate name '" + name + "'");
        order_.push_back(name);
        entries_.emplace(name, std::move(e));
    }
    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    const WorkspaceEntry& at(const std::string& name) const
    {
        auto it = entries_.find(name);
        if (it == entries_.end())
            throw std::out_of_range("workspace: no object named '" + name + "'");
        return it->second;
    }
    template <class T>
    const T& get(const std::string& name) const
    {
        const T* p = std::get_if<T>(&at(name));
        if (!p)
            throw std::invalid_argument("workspace: object '" + name + "' has a different kind");
        return *p;
    }
    /// The first object of kind T, for single-object files.
    template <class T>
    const T& first() const
    {
        for (const auto& n : order_)
            if (const T* p = std::get_if<T>(&entries_.at(n)))
                return *p;
        throw std::invalid_argument("workspace: no object of the requested kind");
    }
    /// The last object of kind T, which is where a serializer puts its subject.
    template <class T>
    const T& last() const
    {
        for (auto it = order_.rbegin(); it != order_.rend(); ++it)
            if (const T* p = std::get_if<T>(&entries_.at(*it)))
                return *p;
        throw std::invalid_argument("workspace: no object of the requested kind");
    }
    const std::vector<std::string>& names() const { return order_; }
    void merge(const Workspace& other)
    {
        for (const auto& n : other.order_)
            add(n, other.entries_.at(n));
    }

private:
    std::map<std::string, WorkspaceEntry> entries_;
    std::vector<std::string> order_;
};

namespace io_detail {

struct Token {
    std::string text;
    int column = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

inline std::vector<Line> lex(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line{number, {}};
        std::size_t k = 0;
        while (k < raw.size()) {
            const char c = raw[k];
            if (c == '#')
                break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++k;
                continue;
            }
            if (c == ':') {
                line.tokens.push_back({":", static_cast<int>(k) + 1});
                ++k;
                continue;
            }
            const std::size_t start = k;
            while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k])) && raw[k] != ':' &&
                   raw[k] != '#')
                ++k;
            line.tokens.push_back({raw.substr(start, k - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_.at(pos_); }
    const Line& next()
    {
        if (done())
            throw ParseError(lines_.empty() ? 1 : lines_.back().number + 1, 1, "unexpected end of input");
        return lines_[pos_++];
    }

    [[noreturn]] static void fail(const Line& l, std::size_t tok, const std::string& what)
    {
        const int col = tok < l.tokens.size() ? l.tokens[tok].column
                                              : (l.tokens.empty() ? 1 : l.tokens.back().column + 1);
        throw ParseError(l.number, col, what);
    }

    static int integer(const Line& l, std::size_t tok)
    {
        if (tok >= l.tokens.size())
            fail(l, tok, "expected an integer");
        const std::string& t = l.tokens[tok].text;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            fail(l, tok, "expected an integer, got '" + t + "'");
        }
        if (used != t.size())
            fail(l, tok, "expected an integer, got '" + t + "'");
        return v;
    }

    static void keyword(const Line& l, std::size_t tok, const std::string& word)
    {
        if (tok >= l.tokens.size() || l.tokens[tok].text != word)
            fail(l, tok, "expected '" + word + "'");
    }

    static std::string word(const Line& l, std::size_t tok)
    {
        if (tok >= l.tokens.size())
            fail(l, tok, "expected a name");
        return l.tokens[tok].text;
    }

    /// Integers after the ':' at position tok.
    static std::vector<int> list_after(const Line& l, std::size_t tok)
    {
        keyword(l, tok, ":");
        std::vector<int> out;
        for (std::size_t k = tok + 1; k < l.tokens.size(); ++k)
            out.push_back(integer(l, k));
        return out;
    }

    static void arity(const Line& l, std::size_t n)
    {
        if (l.tokens.size() != n)
            fail(l, std::min(n, l.tokens.size()), "expected " + std::to_string(n) + " fields");
    }

    /// The next line, which must start with the given keyword.
    const Line& expect(const std::string& word)
    {
        const Line& l = next();
        keyword(l, 0, word);
        return l;
    }

    bool at(const std::string& word) const { return !done() && peek().tokens[0].text == word; }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

/// Runs a validator and reports its failure at the block header.
template <class F>
void checked(const Line& header, F&& f)
{
    try {
        f();
    } catch (const ValidationError& e) {
        throw ParseError(header.number, 1, std::string("validation failed: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(header.number, 1, std::string("invalid data: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(header.number, 1, std::string("invalid data: ") + e.what());
    }
}

inline std::vector<std::vector<int>> levels(Parser& p, int D)
{
    std::vector<std::vector<int>> lv;
    for (int n = 0; n <= D; ++n) {
        const Line& l = p.expect("level");
        if (Parser::integer(l, 1) != n)
            Parser::fail(l, 1, "expected level " + std::to_string(n));
        lv.push_back(Parser::list_after(l, 2));
    }
    return lv;
}

template <class T>
const T& ref(const Workspace& ws, const Line& l, std::size_t tok)
{
    const std::string name = Parser::word(l, tok);
    if (!ws.contains(name))
        Parser::fail(l, tok, "unknown name '" + name + "'");
    const T* p = std::get_if<T>(&ws.at(name));
    if (!p)
        Parser::fail(l, tok, "'" + name + "' has the wrong kind");
    return *p;
}

/// A simplicial set, or the underlying set of a marked one.
inline const SimplicialSet& sset_ref(const Workspace& ws, const Line& l, std::size_t tok)
{
    const std::string name = Parser::word(l, tok);
    if (!ws.contains(name))
        Parser::fail(l, tok, "unknown name '" + name + "'");
    const WorkspaceEntry& e = ws.at(name);
    if (const auto* x = std::get_if<SimplicialSet>(&e))
        return *x;
    if (const auto* m = std::get_if<MarkedSimplicialSet>(&e))
        return m->underlying();
    Parser::fail(l, tok, "'" + name + "' is not a simplicial set");
}

inline const SSetDiagram& diagram_ref(const Workspace& ws, const Line& l, std::size_t tok)
{
    const std::string name = Parser::word(l, tok);
    if (!ws.contains(name))
        Parser::fail(l, tok, "unknown name '" + name + "'");
    const WorkspaceEntry& e = ws.at(name);
    if (const auto* d = std::get_if<SSetDiagram>(&e))
        return *d;
    if (const auto* m = std::get_if<MappingEntry>(&e))
        return m->functor.diagram;
    Parser::fail(l, tok, "'" + name + "' is not a diagram");
}

inline SimplicialSet parse_sset_block(Parser& p, const Line& h)
{
    const Line& dl = p.expect("dim_bound");
    Parser::arity(dl, 2);
    const int D = Parser::integer(dl, 1);
    if (D < 0)
        Parser::fail(dl, 1, "dimension bound must be non-negative");
    const Line& cl = p.expect("counts");
    Parser::arity(cl, static_cast<std::size_t>(D) + 2);
    std::vector<int> counts;
    for (int n = 0; n <= D; ++n)
        counts.push_back(Parser::integer(cl, n + 1));
    std::vector<std::vector<SimplicialSet::Table>> faces(D + 1), degens(D + 1);
    for (int n = 1; n <= D; ++n)
        for (int i = 0; i <= n; ++i) {
            const Line& l = p.expect("face");
            if (Parser::integer(l, 1) != n || Parser::integer(l, 2) != i)
                Parser::fail(l, 1, "expected face table " + std::to_string(n) + " " + std::to_string(i));
            faces[n].push_back(Parser::list_after(l, 3));
        }
    for (int n = 0; n < D; ++n)
        for (int j = 0; j <= n; ++j) {
            const Line& l = p.expect("degen");
            if (Parser::integer(l, 1) != n || Parser::integer(l, 2) != j)
                Parser::fail(l, 1, "expected degeneracy table " + std::to_string(n) + " " + std::to_string(j));
            degens[n].push_back(Parser::list_after(l, 3));
        }
    p.expect("end");
    SimplicialSet X;
    checked(h, [&] {
        X = SimplicialSet(D, counts, faces, degens);
        X.validate();
    });
    return X;
}

inline MarkedSimplicialSet parse_marked_block(Parser& p, const Line& h, const Workspace& ws)
{
    const SimplicialSet& X = sset_ref(ws, p.expect("underlying"), 1);
    const Line& el = p.expect("edges");
    const std::vector<int> edges = Parser::list_after(el, 1);
    p.expect("end");
    std::vector<char> flags(X.dim_bound() >= 1 ? X.count(1) : 0, 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k] < 0 || edges[k] >= static_cast<int>(flags.size()))
            Parser::fail(el, k + 2, "edge out of range");
        flags[edges[k]] = 1;
    }
    MarkedSimplicialSet M;
    checked(h, [&] { M = MarkedSimplicialSet(X, flags); });
    return M;
}

inline FiniteCategory parse_cat_block(Parser& p, const Line& h)
{
    const Line& ol = p.expect("objects");
    Parser::arity(ol, 2);
    const int k = Parser::integer(ol, 1);
    const Line& ml = p.expect("morphisms");
    Parser::arity(ml, 2);
    const int M = Parser::integer(ml, 1);
    if (k < 0 || M < 0)
        Parser::fail(ol, 1, "negative count");
    std::vector<FiniteCategory::Morphism> mor;
    for (int m = 0; m < M; ++m) {
        const Line& l = p.expect("mor");
        Parser::arity(l, 5);
        if (Parser::integer(l, 1) != m)
            Parser::fail(l, 1, "expected morphism " + std::to_string(m));
        Parser::keyword(l, 2, ":");
        mor.push_back({Parser::integer(l, 3), Parser::integer(l, 4)});
        for (std::size_t t : {3u, 4u})
            if (Parser::integer(l, t) < 0 || Parser::integer(l, t) >= k)
                Parser::fail(l, t, "object out of range");
    }
    const Line& il = p.expect("identities");
    const std::vector<int> ids = Parser::list_after(il, 1);
    if (static_cast<int>(ids.size()) != k)
        Parser::fail(il, 1, "need one identity per object");
    for (int i : ids)
        if (i < 0 || i >= M)
            Parser::fail(il, 1, "identity out of range");
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (mor[f].tgt == mor[g].src) {
                if (g == ids[mor[g].src])
                    comp[g][f] = f;
                else if (f == ids[mor[f].src])
                    comp[g][f] = g;
            }
    while (p.at("compose")) {
        const Line& l = p.next();
        Parser::arity(l, 5);
        const int g = Parser::integer(l, 1), f = Parser::integer(l, 2);
        Parser::keyword(l, 3, ":");
        const int r = Parser::integer(l, 4);
        if (g < 0 || g >= M || f < 0 || f >= M || r < 0 || r >= M)
            Parser::fail(l, 1, "morphism out of range");
        if (mor[f].tgt != mor[g].src)
            Parser::fail(l, 1, "morphisms are not composable");
        comp[g][f] = r;
    }
    p.expect("end");
    FiniteCategory C;
    checked(h, [&] {
        for (int g = 0; g < M; ++g)
            for (int f = 0; f < M; ++f)
                if (mor[f].tgt == mor[g].src && comp[g][f] < 0)
                    throw ValidationError("composite " + std::to_string(g) + "." + std::to_string(f) + " missing");
        C = FiniteCategory(k, mor, ids, comp);
        C.validate();
    });
    return C;
}

inline TypedFunctor parse_functor_block(Parser& p, const Line& h, const Workspace& ws)
{
    TypedFunctor F;
    const Line& sl = p.expect("source");
    F.source = ref<FiniteCategory>(ws, sl, 1);
    const Line& tl = p.expect("target");
    F.target = ref<FiniteCategory>(ws, tl, 1);
    F.functor.on_objects = Parser::list_after(p.expect("objects"), 1);
    F.functor.on_morphisms = Parser::list_after(p.expect("morphisms"), 1);
    p.expect("end");
    checked(h, [&] { validate_functor(F.source, F.target, F.functor); });
    return F;
}

inline TypedNaturalIso parse_natiso_block(Parser& p, const Line& h, const Workspace& ws)
{
    TypedNaturalIso N;
    N.from = ref<TypedFunctor>(ws, p.expect("from"), 1);
    N.to = ref<TypedFunctor>(ws, p.expect("to"), 1);
    N.eta.components = Parser::list_after(p.expect("components"), 1);
    p.expect("end");
    checked(h, [&] {
        if (!(N.from.source == N.to.source) || !(N.from.target == N.to.target))
            throw ValidationError("functors have different ends");
        if (!is_natural_iso(N.from.source, N.from.target, N.from.functor, N.to.functor, N.eta))
            throw ValidationError("components do not form a natural isomorphism");
    });
    return N;
}

inline SimplicialMap parse_map_block(Parser& p, const Line& h, const Workspace& ws)
{
    const SimplicialSet& S = sset_ref(ws, p.expect("source"), 1);
    const SimplicialSet& T = sset_ref(ws, p.expect("target"), 1);
    const auto lv = levels(p, S.dim_bound());
    p.expect("end");
    SimplicialMap f;
    checked(h, [&] {
        f = SimplicialMap(S, T, lv);
        f.validate();
    });
    return f;
}

inline SSetDiagram parse_diagram_block(Parser& p, const Line& h, const Workspace& ws)
{
    const SimplicialSet& K = sset_ref(ws, p.expect("base"), 1);
    const Line& bl = p.expect("value_bound");
    Parser::arity(bl, 2);
    const int E = Parser::integer(bl, 1);
    const SimplexCategory J(K);
    std::vector<SimplicialSet> values;
    for (int b = 0; b < J.num_objects(); ++b) {
        const Line& l = p.expect("value");
        Parser::arity(l, 3);
        if (Parser::integer(l, 1) != b)
            Parser::fail(l, 1, "expected value " + std::to_string(b));
        values.push_back(sset_ref(ws, l, 2));
        if (values.back().dim_bound() != E)
            Parser::fail(l, 2, "value has the wrong dimension bound");
    }
    std::vector<std::vector<SimplicialMap>> faces(J.num_objects()), degens(J.num_objects());
    for (int b = 0; b < J.num_objects(); ++b) {
        const int n = J.object(b).dim;
        for (int i = 0; n >= 1 && i <= n; ++i) {
            const Line& l = p.expect("face");
            Parser::arity(l, 3);
            if (Parser::integer(l, 1) != b || Parser::integer(l, 2) != i)
                Parser::fail(l, 1, "expected face action " + std::to_string(b) + " " + std::to_string(i));
            const auto lv = levels(p, E);
            checked(h, [&] { faces[b].emplace_back(values[b], values[J.face_object(b, i)], lv); });
        }
        for (int j = 0; n < J.dim_bound() && j <= n; ++j) {
            const Line& l = p.expect("degen");
            Parser::arity(l, 3);
            if (Parser::integer(l, 1) != b || Parser::integer(l, 2) != j)
                Parser::fail(l, 1, "expected degeneracy action " + std::to_string(b) + " " + std::to_string(j));
            const auto lv = levels(p, E);
            checked(h, [&] { degens[b].emplace_back(values[b], values[J.degeneracy_object(b, j)], lv); });
        }
    }
    p.expect("end");
    SSetDiagram F;
    checked(h, [&] {
        F = SSetDiagram(J, values, faces, degens, E);
        for (int b = 0; b < J.num_objects(); ++b) {
            for (const auto& m : faces[b])
                m.validate();
            for (const auto& m : degens[b])
                m.validate();
        }
        F.validate();
    });
    return F;
}

inline DiagramMap parse_dmap_block(Parser& p, const Line& h, const Workspace& ws)
{
    const SSetDiagram& S = diagram_ref(ws, p.expect("source"), 1);
    const SSetDiagram& T = diagram_ref(ws, p.expect("target"), 1);
    std::vector<SimplicialMap> comps;
    for (int b = 0; b < S.num_objects(); ++b) {
        const Line& l = p.expect("component");
        Parser::arity(l, 2);
        if (Parser::integer(l, 1) != b)
            Parser::fail(l, 1, "expected component " + std::to_string(b));
        const auto lv = levels(p, S.value_bound());
        checked(h, [&] {
            comps.emplace_back(S.value(b), T.value(b), lv);
            comps.back().validate();
        });
    }
    p.expect("end");
    DiagramMap f;
    checked(h, [&] {
        f = DiagramMap(S, T, comps);
        if (auto bad = f.naturality_failure())
            throw ValidationError("not natural at " + describe_object(S.index(), *bad));
    });
    return f;
}

inline Section parse_section_block(Parser& p, const Line& h, const Workspace& ws)
{
    Section s;
    s.diagram = diagram_ref(ws, p.expect("diagram"), 1);
    const Line& dl = p.expect("dim");
    Parser::arity(dl, 2);
    s.dim = Parser::integer(dl, 1);
    s.family = Parser::list_after(p.expect("family"), 1);
    p.expect("end");
    checked(h, [&] {
        const SSetDiagram& F = s.diagram;
        const SimplexCategory& J = F.index();
        if (static_cast<int>(s.family.size()) != F.num_objects())
            throw ValidationError("need one simplex per object");
        for (int b = 0; b < F.num_objects(); ++b) {
            if (s.dim < 0 || s.dim > F.value_bound() || s.family[b] < 0 || s.family[b] >= F.value(b).count(s.dim))
                throw ValidationError("simplex out of range at " + describe_object(J, b));
            const int n = J.object(b).dim;
            for (int i = 0; n >= 1 && i <= n; ++i)
                if (F.face_action(b, i)(s.dim, s.family[b]) != s.family[J.face_object(b, i)])
                    throw ValidationError("family not compatible with d_" + std::to_string(i) + " at " +
                                          describe_object(J, b));
            for (int j = 0; n < J.dim_bound() && j <= n; ++j)
                if (F.degeneracy_action(b, j)(s.dim, s.family[b]) != s.family[J.degeneracy_object(b, j)])
                    throw ValidationError("family not compatible with s_" + std::to_string(j) + " at " +
                                          describe_object(J, b));
        }
    });
    return s;
}

inline MappingEntry parse_mapping_block(Parser& p, const Line& h, const Workspace& ws, std::int64_t budget)
{
    MappingEntry m;
    m.base = sset_ref(ws, p.expect("base"), 1);
    m.target = sset_ref(ws, p.expect("target"), 1);
    const Line& bl = p.expect("value_bound");
    Parser::arity(bl, 2);
    m.value_bound = Parser::integer(bl, 1);
    p.expect("end");
    checked(h, [&] { m.functor = mapping_functor(m.base, m.target, m.value_bound, budget); });
    return m;
}

inline GluingInstance parse_geo_block(Parser& p, const Line& h, const Workspace& ws)
{
    const FiniteCategory B = ref<FiniteCategory>(ws, p.expect("base"), 1);
    const int M = B.num_morphisms();
    std::vector<char> open(M, 0), proper(M, 0);
    auto flags = [&](const Line& l, std::vector<char>& into) {
        for (std::size_t t = 2; t < l.tokens.size(); ++t) {
            const int m = Parser::integer(l, t);
            if (m < 0 || m >= M)
                Parser::fail(l, t, "morphism out of range");
            into[m] = 1;
        }
        Parser::keyword(l, 1, ":");
    };
    flags(p.expect("open"), open);
    flags(p.expect("proper"), proper);
    std::vector<std::vector<Factorization>> chosen(M);
    while (p.at("chosen")) {
        const Line& l = p.next();
        const int m = Parser::integer(l, 1);
        if (m < 0 || m >= M)
            Parser::fail(l, 1, "morphism out of range");
        const std::vector<int> pairs = Parser::list_after(l, 2);
        if (pairs.size() % 2 != 0)
            Parser::fail(l, 3, "factorizations come in (open, proper) pairs");
        for (std::size_t k = 0; k < pairs.size(); k += 2)
            chosen[m].push_back({pairs[k], pairs[k + 1]});
    }
    ValueAssignment V;
    while (p.at("value")) {
        const Line& l = p.next();
        Parser::arity(l, 3);
        if (Parser::integer(l, 1) != static_cast<int>(V.values.size()))
            Parser::fail(l, 1, "values must be listed in object order");
        V.values.push_back(ref<FiniteCategory>(ws, l, 2));
    }
    auto functors = [&](const std::string& word, std::map<int, Functor>& into) {
        while (p.at(word)) {
            const Line& l = p.next();
            Parser::arity(l, 3);
            const int m = Parser::integer(l, 1);
            if (m < 0 || m >= M)
                Parser::fail(l, 1, "morphism out of range");
            const TypedFunctor& F = ref<TypedFunctor>(ws, l, 2);
            into[m] = F.functor;
        }
    };
    functors("open_functor", V.open_functors);
    functors("proper_functor", V.proper_functors);
    while (p.at("support")) {
        const Line& l = p.next();
        CompMorphism cm{{Parser::integer(l, 1), Parser::integer(l, 2)},
                        {Parser::integer(l, 3), Parser::integer(l, 4)},
                        Parser::integer(l, 5)};
        V.support[cm] = NaturalTransformation{Parser::list_after(l, 6)};
    }
    p.expect("end");
    GluingInstance g;
    checked(h, [&] {
        g.geo = GeoCategory(B, open, proper, chosen);
        g.values = V;
        validate_values(g.geo, g.values);
    });
    return g;
}

} // namespace io_detail

/// Parses every block of a text into a workspace, optionally on top of `base`.
inline Workspace parse_workspace(const std::string& text, const Workspace& base = {},
                                 std::int64_t budget = default_hom_budget)
{
    using namespace io_detail;
    Workspace ws = base;
    Parser p(lex(text));
    int anonymous = 0;
    while (!p.done()) {
        const Line& h = p.next();
        const std::string kind = h.tokens[0].text;
        static const std::set<std::string> kinds{"SSET", "MARKED", "MAP",     "CAT",     "FUNCTOR", "NATISO",
                                                 "DIAGRAM", "DMAP", "SECTION", "MAPPING", "GEO"};
        if (!kinds.count(kind))
            Parser::fail(h, 0, "expected a block header such as 'SSET v1', got '" + kind + "'");
        if (h.tokens.size() < 2 || h.tokens[1].text != "v1")
            Parser::fail(h, 1, "expected a version after '" + kind + "'");
        if (h.tokens.size() > 3)
            Parser::fail(h, 3, "unexpected text after the block name");
        const std::string name = h.tokens.size() == 3 ? h.tokens[2].text : "_" + std::to_string(anonymous++);
        if (ws.contains(name))
            Parser::fail(h, 2, "duplicate name '" + name + "'");
        WorkspaceEntry e;
        if (kind == "SSET")
            e = parse_sset_block(p, h);
        else if (kind == "MARKED")
            e = parse_marked_block(p, h, ws);
        else if (kind == "MAP")
            e = parse_map_block(p, h, ws);
        else if (kind == "CAT")
            e = parse_cat_block(p, h);
        else if (kind == "FUNCTOR")
            e = parse_functor_block(p, h, ws);
        else if (kind == "NATISO")
            e = parse_natiso_block(p, h, ws);
        else if (kind == "DIAGRAM")
            e = parse_diagram_block(p, h, ws);
        else if (kind == "DMAP")
            e = parse_dmap_block(p, h, ws);
        else if (kind == "SECTION")
            e = parse_section_block(p, h, ws);
        else if (kind == "MAPPING")
            e = parse_mapping_block(p, h, ws, budget);
        else
            e = parse_geo_block(p, h, ws);
        ws.add(name, std::move(e));
    }
    return ws;
}

inline SimplicialSet parse_sset(const std::string& text)
{
    const Workspace ws = parse_workspace(text);
    if (ws.names().size() != 1)
        throw ParseError(1, 1, "expected exactly one SSET block");
    return ws.get<SimplicialSet>(ws.names().front());
}

// ---------------------------------------------------------------------------
// Writing

/// Emits blocks, naming each distinct dependency once.
class Writer {
public:
    std::string str() const { return out_.str(); }

    std::string sset(const SimplicialSet& X, const std::string& hint = "sset")
    {
        if (auto n = find(ssets_, X))
            return *n;
        const std::string name = fresh(hint);
        out_ << "SSET v1 " << name << "\n";
        body(X);
        out_ << "end\n";
        ssets_.emplace_back(X, name);
        return name;
    }

    std::string marked(const MarkedSimplicialSet& X, const std::string& hint = "marked")
    {
        if (auto n = find(marked_, X))
            return *n;
        const std::string u = sset(X.underlying(), hint + "_underlying");
        const std::string name = fresh(hint);
        out_ << "MARKED v1 " << name << "\nunderlying " << u << "\n";
        list("edges", X.marked_nondegenerate_edges());
        out_ << "end\n";
        marked_.emplace_back(X, name);
        return name;
    }

    std::string map(const SimplicialMap& f, const std::string& hint = "map")
    {
        const std::string s = sset(f.source(), hint + "_source");
        const std::string t = sset(f.target(), hint + "_target");
        const std::string name = fresh(hint);
        out_ << "MAP v1 " << name << "\nsource " << s << "\ntarget " << t << "\n";
        levels(f);
        out_ << "end\n";
        return name;
    }

    std::string category(const FiniteCategory& C, const std::string& hint = "cat")
    {
        if (auto n = find(cats_, C))
            return *n;
        const std::string name = fresh(hint);
        out_ << "CAT v1 " << name << "\nobjects " << C.num_objects() << "\nmorphisms " << C.num_morphisms() << "\n";
        for (int m = 0; m < C.num_morphisms(); ++m)
            out_ << "mor " << m << ": " << C.src(m) << ' ' << C.tgt(m) << "\n";
        list("identities", C.identities());
        for (int g = 0; g < C.num_morphisms(); ++g)
            for (int f = 0; f < C.num_morphisms(); ++f)
                if (C.tgt(f) == C.src(g) && !C.is_identity(g) && !C.is_identity(f))
                    out_ << "compose " << g << ' ' << f << ": " << C.compose(g, f) << "\n";
        out_ << "end\n";
        cats_.emplace_back(C, name);
        return name;
    }

    std::string functor(const TypedFunctor& F, const std::string& hint = "functor")
    {
        if (auto n = find(functors_, F))
            return *n;
        const std::string s = category(F.source, hint + "_source");
        const std::string t = category(F.target, hint + "_target");
        const std::string name = fresh(hint);
        out_ << "FUNCTOR v1 " << name << "\nsource " << s << "\ntarget " << t << "\n";
        list("objects", F.functor.on_objects);
        list("morphisms", F.functor.on_morphisms);
        out_ << "end\n";
        functors_.emplace_back(F, name);
        return name;
    }

    std::string natiso(const TypedNaturalIso& N, const std::string& hint = "natiso")
    {
        const std::string a = functor(N.from, hint + "_from");
        const std::string b = functor(N.to, hint + "_to");
        const std::string name = fresh(hint);
        out_ << "NATISO v1 " << name << "\nfrom " << a << "\nto " << b << "\n";
        list("components", N.eta.components);
        out_ << "end\n";
        return name;
    }

    std::string diagram(const SSetDiagram& F, const std::string& hint = "diagram")
    {
        if (auto n = find(diagrams_, F))
            return *n;
        const std::string base = sset(F.base(), hint + "_base");
        std::vector<std::string> values;
        for (int b = 0; b < F.num_objects(); ++b)
            values.push_back(sset(F.value(b), hint + "_value"));
        const std::string name = fresh(hint);
        const SimplexCategory& J = F.index();
        out_ << "DIAGRAM v1 " << name << "\nbase " << base << "\nvalue_bound " << F.value_bound() << "\n";
        for (int b = 0; b < F.num_objects(); ++b)
            out_ << "value " << b << ' ' << values[b] << "\n";
        for (int b = 0; b < F.num_objects(); ++b) {
            const int n = J.object(b).dim;
            for (int i = 0; n >= 1 && i <= n; ++i) {
                out_ << "face " << b << ' ' << i << "\n";
                levels(F.face_action(b, i));
            }
            for (int j = 0; n < J.dim_bound() && j <= n; ++j) {
                out_ << "degen " << b << ' ' << j << "\n";
                levels(F.degeneracy_action(b, j));
            }
        }
        out_ << "end\n";
        diagrams_.emplace_back(F, name);
        return name;
    }

    std::string mapping(const MappingEntry& m, const std::string& hint = "mapping")
    {
        if (auto n = find(mappings_, m))
            return *n;
        const std::string k = sset(m.base, hint + "_base");
        const std::string c = sset(m.target, hint + "_target");
        const std::string name = fresh(hint);
        out_ << "MAPPING v1 " << name << "\nbase " << k << "\ntarget " << c << "\nvalue_bound " << m.value_bound
             << "\nend\n";
        mappings_.emplace_back(m, name);
        diagrams_.emplace_back(m.functor.diagram, name);
        return name;
    }

    std::string dmap(const DiagramMap& f, const std::string& hint = "dmap")
    {
        const std::string s = diagram(f.source(), hint + "_source");
        const std::string t = diagram(f.target(), hint + "_target");
        const std::string name = fresh(hint);
        out_ << "DMAP v1 " << name << "\nsource " << s << "\ntarget " << t << "\n";
        for (int b = 0; b < f.source().num_objects(); ++b) {
            out_ << "component " << b << "\n";
            levels(f.component(b));
        }
        out_ << "end\n";
        return name;
    }

    std::string section(const Section& s, const std::string& hint = "section")
    {
        const std::string d = diagram(s.diagram, hint + "_diagram");
        const std::string name = fresh(hint);
        out_ << "SECTION v1 " << name << "\ndiagram " << d << "\ndim " << s.dim << "\n";
        list("family", s.family);
        out_ << "end\n";
        return name;
    }

    std::string geo(const GluingInstance& g, const std::string& hint = "geo")
    {
        const FiniteCategory& B = g.geo.base();
        const std::string base = category(B, hint + "_base");
        std::vector<std::string> values;
        for (std::size_t x = 0; x < g.values.values.size(); ++x)
            values.push_back(category(g.values.values[x], hint + "_value" + std::to_string(x)));
        std::map<int, std::string> opens, propers;
        for (const auto& [m, F] : g.values.open_functors)
            opens[m] = functor({g.values.values[B.src(m)], g.values.values[B.tgt(m)], F},
                               hint + "_open" + std::to_string(m));
        for (const auto& [m, F] : g.values.proper_functors)
            propers[m] = functor({g.values.values[B.src(m)], g.values.values[B.tgt(m)], F},
                                 hint + "_proper" + std::to_string(m));
        const std::string name = fresh(hint);
        out_ << "GEO v1 " << name << "\nbase " << base << "\nopen:";
        for (int m = 0; m < B.num_morphisms(); ++m)
            if (g.geo.is_open(m))
                out_ << ' ' << m;
        out_ << "\nproper:";
        for (int m = 0; m < B.num_morphisms(); ++m)
            if (g.geo.is_proper(m))
                out_ << ' ' << m;
        out_ << "\n";
        for (int m = 0; m < B.num_morphisms(); ++m) {
            out_ << "chosen " << m << ":";
            for (const Factorization& c : g.geo.chosen(m))
                out_ << ' ' << c.open << ' ' << c.proper;
            out_ << "\n";
        }
        for (std::size_t x = 0; x < values.size(); ++x)
            out_ << "value " << x << ' ' << values[x] << "\n";
        for (const auto& [m, n] : opens)
            out_ << "open_functor " << m << ' ' << n << "\n";
        for (const auto& [m, n] : propers)
            out_ << "proper_functor " << m << ' ' << n << "\n";
        for (const auto& [cm, eta] : g.values.support) {
            out_ << "support " << cm.from.open << ' ' << cm.from.proper << ' ' << cm.to.open << ' ' << cm.to.proper
                 << ' ' << cm.via << ":";
            for (int c : eta.components)
                out_ << ' ' << c;
            out_ << "\n";
        }
        out_ << "end\n";
        return name;
    }

    /// Any workspace entry.
    std::string entry(const WorkspaceEntry& e, const std::string& hint)
    {
        return std::visit(
            [&](const auto& x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, SimplicialSet>)
                    return sset(x, hint);
                else if constexpr (std::is_same_v<T, MarkedSimplicialSet>)
                    return marked(x, hint);
                else if constexpr (std::is_same_v<T, SimplicialMap>)
                    return map(x, hint);
                else if constexpr (std::is_same_v<T, FiniteCategory>)
                    return category(x, hint);
                else if constexpr (std::is_same_v<T, TypedFunctor>)
                    return functor(x, hint);
                else if constexpr (std::is_same_v<T, TypedNaturalIso>)
                    return natiso(x, hint);
                else if constexpr (std::is_same_v<T, SSetDiagram>)
                    return diagram(x, hint);
                else if constexpr (std::is_same_v<T, DiagramMap>)
                    return dmap(x, hint);
                else if constexpr (std::is_same_v<T, Section>)
                    return section(x, hint);
                else if constexpr (std::is_same_v<T, MappingEntry>)
                    return mapping(x, hint);
                else
                    return geo(x, hint);
            },
            e);
    }

private:
    template <class T>
    static std::optional<std::string> find(const std::vector<std::pair<T, std::string>>& seen, const T& x)
    {
        for (const auto& [y, n] : seen)
            if (y == x)
                return n;
        return std::nullopt;
    }

    std::string fresh(const std::string& hint)
    {
        std::string name = hint;
        for (int k = 2; used_.count(name); ++k)
            name = hint + "_" + std::to_string(k);
        used_.emplace(name, 1);
        return name;
    }

    void list(const char* key, const std::vector<int>& v)
    {
        out_ << key << ":";
        for (int x : v)
            out_ << ' ' << x;
        out_ << "\n";
    }

    void body(const SimplicialSet& X)
    {
        const int D = X.dim_bound();
        out_ << "dim_bound " << D << "\ncounts";
        for (int n = 0; n <= D; ++n)
            out_ << ' ' << X.count(n);
        out_ << "\n";
        for (int n = 1; n <= D; ++n)
            for (int i = 0; i <= n; ++i) {
                out_ << "face " << n << ' ' << i << ":";
                for (int x = 0; x < X.count(n); ++x)
                    out_ << ' ' << X.face(n, i, x);
                out_ << "\n";
            }
        for (int n = 0; n < D; ++n)
            for (int j = 0; j <= n; ++j) {
                out_ << "degen " << n << ' ' << j << ":";
                for (int x = 0; x < X.count(n); ++x)
                    out_ << ' ' << X.degeneracy(n, j, x);
                out_ << "\n";
            }
    }

    void levels(const SimplicialMap& f)
    {
        for (int n = 0; n <= f.source().dim_bound(); ++n) {
            out_ << "level " << n << ":";
            for (int y : f.levels()[n])
                out_ << ' ' << y;
            out_ << "\n";
        }
    }

    std::ostringstream out_;
    std::map<std::string, int> used_;
    std::vector<std::pair<SimplicialSet, std::string>> ssets_;
    std::vector<std::pair<MarkedSimplicialSet, std::string>> marked_;
    std::vector<std::pair<FiniteCategory, std::string>> cats_;
    std::vector<std::pair<TypedFunctor, std::string>> functors_;
    std::vector<std::pair<SSetDiagram, std::string>> diagrams_;
    std::vector<std::pair<MappingEntry, std::string>> mappings_;
};

inline std::string serialize(const SimplicialSet& X, const std::string& name = "X")
{
    Writer w;
    w.sset(X, name);
    return w.str();
}

/// Writes one entry with its dependencies; the entry itself is the last block.
inline std::string serialize(const WorkspaceEntry& e, const std::string& name)
{
    Writer w;
    w.entry(e, name);
    return w.str();
}

/// The last block of a text, which is where serialize puts the entry itself.
inline const WorkspaceEntry& last_entry(const Workspace& ws) { return ws.at(ws.names().back()); }

} // namespace sset
