#pragma once

#include <string>
#include <vector>

#include "bellforge/strategy.hpp"

namespace bellforge {

// One-round two-player game: question distribution dist[x][y] and real
// scoring tensor score[x][y][a][b], both stored flat in row-major order.
struct NonlocalGame {
    std::string name;
    int nx = 0, ny = 0, na = 0, nb = 0;
    std::vector<double> dist;
    std::vector<double> score;

    double dist_at(int x, int y) const { return dist[size_t(x) * ny + y]; }
    double& dist_at(int x, int y) { return dist[size_t(x) * ny + y]; }
    double score_at(int x, int y, int a, int b) const {
        return score[((size_t(x) * ny + y) * na + a) * nb + b];
    }
    double& score_at(int x, int y, int a, int b) {
        return score[((size_t(x) * ny + y) * na + a) * nb + b];
    }

    void validate() const;  // shape + distribution checks
};

struct Correlation {
    int nx = 0, ny = 0, na = 0, nb = 0;
    std::vector<double> p;

    double at(int x, int y, int a, int b) const {
        return p[((size_t(x) * ny + y) * na + a) * nb + b];
    }
    double& at(int x, int y, int a, int b) {
        return p[((size_t(x) * ny + y) * na + a) * nb + b];
    }
};

// How the composed game's questions map onto its three parts.
struct EmbQuestionMap {
    enum Part { kPartA = 0, kPartB = 1, kPartC = 2, kUnplayed = -1 };
    struct Question {
        bool tchsh = false;  // false: 3-CHSH prefix, true: ~tCHSH prefix
        int inner = 0;
    };
    std::vector<Question> alice;  // 5 questions
    std::vector<Question> bob;    // 6 questions
    std::vector<double> pair_prob;  // nx*ny, row-major

    int part_of(int x, int y) const;
};

struct EmbGame {
    NonlocalGame game;
    EmbQuestionMap map;
};

NonlocalGame build_tchsh(double alpha, bool flipped);

// Validates a loaded 3-CHSH game definition (3x4 questions, 3x3 answers,
// uniform distribution).
void validate_three_chsh(const NonlocalGame& g);

EmbGame build_emb(const NonlocalGame& three_chsh);

double strategy_value(const NonlocalGame& g, const QuantumStrategy& s);

Correlation correlation_of_strategy(const QuantumStrategy& s, int nx, int ny);

double correlation_value(const NonlocalGame& g, const Correlation& c);

// Exact maximum over deterministic strategy pairs; refuses above 10^7 pairs.
double classical_value(const NonlocalGame& g);

// l-infinity distance over all (x, y, a, b) entries.
double correlation_distance(const Correlation& p, const Correlation& q);

// Expected score conditioned on the referee choosing the given part.
double part_value(const EmbGame& eg, const QuantumStrategy& s, int part);

}  // namespace bellforge
