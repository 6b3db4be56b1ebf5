#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptri {

// Chirality of a central chord. A touches the disk at the vertex angle + (90° - δ),
// B at - (90° - δ). A is displayed as "L", B as "R".
enum class Side : std::uint8_t { A = 0, B = 1 };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
inline char side_letter(Side s) { return s == Side::A ? 'L' : 'R'; }

struct Chord {
    enum class Kind : std::uint8_t { Straight = 0, Central = 1 };

    Kind kind = Kind::Straight;
    int p = 0;
    int q = 0;           // straight chords only, p < q
    Side side = Side::A; // central chords only

    bool central() const { return kind == Kind::Central; }

    auto operator<=>(const Chord&) const = default;
};

struct CsPair {
    Chord rep;
    Chord partner;
    auto operator<=>(const CsPair&) const = default;
};

// The configuration D_n: a regular 2n-gon with a small disk at the center.
// Holds the sorted list of all centrally symmetric pairs and a pair crossing table.
class Dn {
public:
    explicit Dn(int n);

    int n() const { return n_; }
    int vertices() const { return 2 * n_; }
    int mod(int v) const { return ((v % (2 * n_)) + 2 * n_) % (2 * n_); }
    int antipode(int p) const { return mod(p + n_); }

    Chord straight(int p, int q) const;
    Chord central(int p, Side s) const;
    bool valid(const Chord& c) const;
    Chord partner(const Chord& c) const;
    std::vector<Chord> all_chords() const;

    const std::vector<CsPair>& pairs() const { return pairs_; }
    int pair_count() const { return static_cast<int>(pairs_.size()); }
    int pair_index(const Chord& c) const;
    const CsPair& pair(int i) const { return pairs_.at(i); }

    bool crosses(const Chord& a, const Chord& b) const;
    bool pairs_cross(int i, int j) const { return pair_cross_[i * pair_count() + j]; }
    // chords of pair theta crossed by the representative of pair delta
    int crossing_number(int theta, int delta) const;

    // Position of the tangency point on the disk, in units of π/(4n), counterclockwise.
    // Ties between the A-slot at p and the B-slot at p̄ go to A first.
    int touch_key(const Chord& c) const;
    // Counterclockwise order key of a chord end at polygon vertex v (v must be an endpoint).
    int end_key(int v, const Chord& c) const;

    std::string name(const Chord& c) const;
    std::string pair_name(int i) const { return name(pairs_.at(i).rep); }
    std::optional<Chord> parse_chord(const std::string& s) const;

private:
    int n_;
    std::vector<CsPair> pairs_;
    std::vector<bool> pair_cross_;
    bool strictly_inside_short_arc(int p, int q, int r) const;
};

// A pseudotriangulation is the sorted list of its pair indices.
using PT = std::vector<int>;

enum class PTClass { Central, TypeLeft, TypeRight };
std::string class_name(PTClass c);

bool noncrossing(const Dn& d, const std::vector<int>& pairs);
bool is_pseudotriangulation(const Dn& d, const std::vector<int>& pairs);
PTClass classify(const Dn& d, const PT& t);
// For a central T, the vertex p < n carrying both central families.
int central_vertex(const Dn& d, const PT& t);

struct FlipResult {
    PT t;
    int added = -1;
};
FlipResult flip(const Dn& d, const PT& t, int pair);

PT star(const Dn& d, Side s);
// Both central pairs at p plus the straight fan [p, p+2], ..., [p, p+n-1].
PT central_seed(const Dn& d, int p);

struct FlipEdge {
    int removed;
    int added;
    int target;
};

struct FlipGraph {
    std::vector<PT> nodes;                  // sorted canonical order
    std::vector<std::vector<FlipEdge>> adj; // one entry per pair of the node, in pair order
    int index_of(const PT& t) const;
};

FlipGraph enumerate(const Dn& d, int jobs = 1);

// Faces of a noncrossing centrally symmetric chord set, excluding the outer face and the disk.
struct MapNode {
    bool touch = false; // false: polygon vertex; true: tangency point of `chord`
    int vertex = 0;
    Chord chord;
    auto operator<=>(const MapNode&) const = default;
};

enum class EdgeKind : std::uint8_t { Boundary, Chord, Arc };

struct Dart {
    EdgeKind kind;
    MapNode from;
    MapNode to;
    Chord chord;  // EdgeKind::Chord
    int edge = 0;        // EdgeKind::Boundary: edge e joins e and e+1
    bool forward = true; // EdgeKind::Arc: traversed counterclockwise around the disk
};

// A piece of a face side: either a chord or a boundary edge.
struct SideItem {
    bool boundary = false;
    int edge = 0;
    Chord chord;
};

enum class FaceKind { DegenerateCentral, Central, Internal, Ordinary };
std::string face_kind_name(FaceKind k);

struct Face {
    std::vector<Dart> darts; // in tracing order
    std::vector<MapNode> corners;
    std::vector<std::vector<SideItem>> sides; // sides[i] runs from corners[i] to corners[i+1]
    FaceKind kind = FaceKind::Ordinary;
    std::vector<Chord> chords() const;
    bool has_corner(const MapNode& m) const;
};

std::vector<Face> faces(const Dn& d, const std::vector<int>& pairs);

// True when the chord meets the interior of the face.
bool crosses_face(const Dn& d, const Face& f, const Chord& c);

} // namespace ptri
