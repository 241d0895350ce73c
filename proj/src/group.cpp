#include "crrt/group.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "crrt/hash.hpp"

namespace crrt {

namespace {

constexpr int kPrimalityRounds = 64;  // error < 4^-64
constexpr int kPrimeSearchBudget = 200000;
constexpr int kHashToGroupRetries = 256;

mpz_class mpz_from_digest(const Digest& d) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), d.size(), 1, 1, 0, 0, d.data());
    return out;
}

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) != 0;
}

mpz_class mpz_from_hex(const std::string& hex) {
    mpz_class out;
    if (mpz_set_str(out.get_mpz_t(), hex.c_str(), 16) != 0) {
        throw DecodeError("invalid hex integer: " + hex);
    }
    return out;
}

std::string mpz_to_hex(const mpz_class& n) {
    char* raw = mpz_get_str(nullptr, 16, n.get_mpz_t());
    std::string out(raw);
    void (*freefunc)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, out.size() + 1);
    return out;
}

}  // namespace

void GroupParams::derive_sizes() {
    p_bits_ = static_cast<unsigned>(mpz_sizeinbase(p_.get_mpz_t(), 2));
    q_bits_ = static_cast<unsigned>(mpz_sizeinbase(q_.get_mpz_t(), 2));
}

GroupParams GroupParams::generate(unsigned q_bits, unsigned p_bits, std::uint64_t seed) {
    if (q_bits < 7) throw GroupError("q_bits must be at least 7");
    if (p_bits <= q_bits) throw GroupError("p_bits must exceed q_bits");

    Rng rng(seed);
    GroupParams params;

    // Draw a q_bits prime, then search p = k*q + 1 of exactly p_bits.
    // If no p shows up for this q within the inner budget, redraw q.
    mpz_class q_lo = mpz_class(1) << (q_bits - 1);
    unsigned k_bits = p_bits - q_bits;
    mpz_class k_lo = k_bits > 1 ? (mpz_class(1) << (k_bits - 1)) : mpz_class(1);
    const int inner_budget = std::max(64, static_cast<int>(p_bits) * 32);

    bool found = false;
    for (int outer = 0; outer < kPrimeSearchBudget && !found; ++outer) {
        mpz_class q_cand = q_lo + rng.below(q_lo);
        mpz_setbit(q_cand.get_mpz_t(), 0);
        if (!is_probable_prime(q_cand)) continue;

        for (int inner = 0; inner < inner_budget; ++inner) {
            mpz_class k = k_lo + rng.below(k_lo);
            mpz_class p_cand = k * q_cand + 1;
            if (mpz_sizeinbase(p_cand.get_mpz_t(), 2) != p_bits) continue;
            if (is_probable_prime(p_cand)) {
                params.q_ = q_cand;
                params.p_ = p_cand;
                found = true;
                break;
            }
        }
    }
    if (!found) throw GroupError("prime search budget exhausted");

    params.derive_sizes();

    // g: x^((p-1)/q) for random x until nontrivial.
    mpz_class cofactor = (params.p_ - 1) / params.q_;
    found = false;
    for (int iter = 0; iter < kHashToGroupRetries; ++iter) {
        mpz_class x = 2 + rng.below(params.p_ - 3);
        mpz_class g;
        mpz_powm(g.get_mpz_t(), x.get_mpz_t(), cofactor.get_mpz_t(), params.p_.get_mpz_t());
        if (g != 1) {
            params.g_ = GroupElement{g};
            found = true;
            break;
        }
    }
    if (!found) throw GroupError("failed to find a generator");

    // Second generator from a g-derived label; no party knows log_g h.
    params.h_ = params.hash_to_group("crrt/second-generator/v1:" +
                                     to_hex(params.encode_element(params.g_)));
    return params;
}

const GroupParams& GroupParams::test_profile() {
    static const GroupParams params = generate(7, 10, 0x7e57);
    return params;
}

GroupParams GroupParams::secure_profile(std::uint64_t seed) { return generate(256, 2048, seed); }

GroupElement GroupParams::mul(const GroupElement& a, const GroupElement& b) const {
    GroupElement out;
    out.v = a.v * b.v;
    mpz_mod(out.v.get_mpz_t(), out.v.get_mpz_t(), p_.get_mpz_t());
    return out;
}

GroupElement GroupParams::inv(const GroupElement& a) const {
    GroupElement out;
    if (mpz_invert(out.v.get_mpz_t(), a.v.get_mpz_t(), p_.get_mpz_t()) == 0) {
        throw GroupError("element not invertible");
    }
    return out;
}

GroupElement GroupParams::div(const GroupElement& a, const GroupElement& b) const {
    return mul(a, inv(b));
}

GroupElement GroupParams::pow(const GroupElement& base, const Scalar& e) const {
    GroupElement out;
    mpz_powm(out.v.get_mpz_t(), base.v.get_mpz_t(), e.v.get_mpz_t(), p_.get_mpz_t());
    return out;
}

bool GroupParams::is_member(const GroupElement& e) const {
    if (e.v < 1 || e.v >= p_) return false;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), e.v.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
    return r == 1;
}

Scalar GroupParams::scalar(const mpz_class& x) const {
    Scalar out;
    mpz_mod(out.v.get_mpz_t(), x.get_mpz_t(), q_.get_mpz_t());
    return out;
}

Scalar GroupParams::s_inv(const Scalar& a) const {
    Scalar out;
    if (mpz_invert(out.v.get_mpz_t(), a.v.get_mpz_t(), q_.get_mpz_t()) == 0) {
        throw GroupError("scalar not invertible");
    }
    return out;
}

GroupElement GroupParams::hash_to_group(const std::string& label) const {
    if (label.empty()) throw GroupError("hash_to_group label must be nonempty");
    mpz_class cofactor = (p_ - 1) / q_;
    for (int counter = 0; counter < kHashToGroupRetries; ++counter) {
        Digest d = HashTranscript("crrt/hash-to-group/v1")
                       .field(mpz_to_hex(p_))
                       .field(mpz_to_hex(q_))
                       .field(label)
                       .field_u64(static_cast<std::uint64_t>(counter))
                       .finish();
        mpz_class x = mpz_from_digest(d) % p_;
        if (x < 2) continue;
        mpz_class e;
        mpz_powm(e.get_mpz_t(), x.get_mpz_t(), cofactor.get_mpz_t(), p_.get_mpz_t());
        if (e != 1) return GroupElement{e};
    }
    throw GroupError("hash_to_group retry budget exhausted");
}

namespace {

// Big-endian fixed-width export; value must fit in width bytes.
Bytes export_fixed(const mpz_class& v, std::size_t width) {
    Bytes out(width, 0);
    if (v == 0) return out;
    std::size_t nbytes = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    if (nbytes > width) throw GroupError("value too large for fixed-width encoding");
    std::size_t count = 0;
    mpz_export(out.data() + width - nbytes, &count, 1, 1, 0, 0, v.get_mpz_t());
    return out;
}

}  // namespace

Bytes GroupParams::encode_element(const GroupElement& e) const {
    return export_fixed(e.v, element_width());
}

GroupElement GroupParams::decode_element(std::span<const std::uint8_t> bytes) const {
    if (bytes.size() != element_width()) {
        throw DecodeError("element encoding has wrong length");
    }
    GroupElement e;
    mpz_import(e.v.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
    if (e.v < 1 || e.v >= p_) throw DecodeError("element out of range [1, p-1]");
    if (!is_member(e)) throw DecodeError("element fails subgroup membership check");
    return e;
}

Bytes GroupParams::encode_scalar(const Scalar& s) const {
    return export_fixed(s.v, scalar_width());
}

Scalar GroupParams::decode_scalar(std::span<const std::uint8_t> bytes) const {
    if (bytes.size() != scalar_width()) {
        throw DecodeError("scalar encoding has wrong length");
    }
    mpz_class x;
    mpz_import(x.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
    if (x >= q_) throw DecodeError("scalar not reduced mod q");
    return Scalar{x};
}

Bytes GroupParams::fingerprint() const {
    HashTranscript t("crrt/group-params/v1");
    t.field(mpz_to_hex(p_)).field(mpz_to_hex(q_)).field(mpz_to_hex(g_.v)).field(mpz_to_hex(h_.v));
    Digest d = t.finish();
    return Bytes(d.begin(), d.end());
}

std::string GroupParams::to_json() const {
    nlohmann::json j;
    j["p"] = mpz_to_hex(p_);
    j["q"] = mpz_to_hex(q_);
    j["g"] = mpz_to_hex(g_.v);
    j["h"] = mpz_to_hex(h_.v);
    return j.dump(2);
}

GroupParams GroupParams::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GroupParams params;
    params.p_ = mpz_from_hex(j.at("p").get<std::string>());
    params.q_ = mpz_from_hex(j.at("q").get<std::string>());
    params.g_ = GroupElement{mpz_from_hex(j.at("g").get<std::string>())};
    params.h_ = GroupElement{mpz_from_hex(j.at("h").get<std::string>())};
    params.derive_sizes();

    if (!is_probable_prime(params.p_) || !is_probable_prime(params.q_)) {
        throw GroupError("params: p and q must be prime");
    }
    if ((params.p_ - 1) % params.q_ != 0) throw GroupError("params: q must divide p-1");
    for (const GroupElement* e : {&params.g_, &params.h_}) {
        if (e->v == 1 || !params.is_member(*e)) {
            throw GroupError("params: generators must be nontrivial subgroup members");
        }
    }
    return params;
}

}  // namespace crrt
