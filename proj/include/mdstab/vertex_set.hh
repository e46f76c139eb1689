#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace mdstab
{
    // Dynamic bitset over vertex indices 0..capacity-1.
    class VertexSet
    {
    public:
        VertexSet() = default;

        explicit VertexSet(int capacity) :
            _capacity(capacity),
            _words((capacity + 63) / 64, 0)
        {
        }

        VertexSet(int capacity, std::span<const std::uint64_t> words) :
            _capacity(capacity),
            _words(words.begin(), words.end())
        {
        }

        static auto full(int capacity) -> VertexSet
        {
            VertexSet s(capacity);
            for (int v = 0; v < capacity; ++v)
                s.set(v);
            return s;
        }

        [[nodiscard]] auto capacity() const -> int { return _capacity; }

        void set(int v) { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
        void reset(int v) { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
        [[nodiscard]] auto test(int v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1; }

        [[nodiscard]] auto count() const -> int
        {
            int c = 0;
            for (auto w : _words)
                c += std::popcount(w);
            return c;
        }

        [[nodiscard]] auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        // Lowest member, or -1.
        [[nodiscard]] auto first() const -> int { return next(0); }

        // Lowest member >= from, or -1.
        [[nodiscard]] auto next(int from) const -> int
        {
            if (from >= _capacity)
                return -1;
            std::size_t i = from >> 6;
            std::uint64_t w = _words[i] & (~std::uint64_t{0} << (from & 63));
            while (true) {
                if (w)
                    return static_cast<int>(i * 64 + std::countr_zero(w));
                if (++i == _words.size())
                    return -1;
                w = _words[i];
            }
        }

        auto operator&=(std::span<const std::uint64_t> other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other[i];
            return *this;
        }

        auto operator&=(const VertexSet & other) -> VertexSet & { return *this &= other.words(); }

        auto operator|=(std::span<const std::uint64_t> other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other[i];
            return *this;
        }

        auto operator|=(const VertexSet & other) -> VertexSet & { return *this |= other.words(); }

        // True iff this is a subset of other.
        [[nodiscard]] auto subset_of(const VertexSet & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        [[nodiscard]] auto members() const -> std::vector<int>
        {
            std::vector<int> out;
            for (int v = first(); v != -1; v = next(v + 1))
                out.push_back(v);
            return out;
        }

        [[nodiscard]] auto words() const -> std::span<const std::uint64_t> { return _words; }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    private:
        int _capacity = 0;
        std::vector<std::uint64_t> _words;
    };
}
