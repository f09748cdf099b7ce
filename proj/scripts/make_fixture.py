#!/usr/bin/env python3
# Copyright 2026 The semspace Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the mini-corpus under data/fixture.

Paragraphs are bags of topic words. The output is a pure function of SEED, so
rerunning the script reproduces the checked-in files byte for byte.
"""

import argparse
import pathlib
import random

SEED = 20260416

# Shared filler that appears across topics.
COMMON = """في من على إلى عن مع أن قد كما هذا هذه التي الذي وقال وأضاف
خلال بعد قبل اليوم أمس العام الجديد الأول الثاني كبير عدد""".split()

TOPICS = {
    # The two diplomatic topics keep السفير and السفارة in separate contexts.
    "envoy": """السفير التقى الوزير وزير الخارجية رسالة الرئيس نقل سفيرا المبعوث
الدبلوماسي محادثات لقاء استقبل وفد العلاقات الثنائية تعاون تسلم أوراق اعتماده
مراسم القصر الملك الأمير ولي العهد الزيارة الرسمية جولة مباحثات تناول القضايا
الإقليمية الدولية المشتركة بحث سبل تعزيز نائب المندوب الدائم المنظمة الأمم
المتحدة قمة مؤتمر صحفي تصريحات أكد حرص بلاده""".split(),
    "mission": """السفارة المبنى التأشيرة طلبات المراجعين القنصلية الجالية
المواطنين المقيمين أبواب مغلقة الحراسة أمن عطلة المواعيد الإجراءات الجوازات
الشارع الحي التأشيرات الاستمارة الرسوم النموذج الصور الوثائق المصدقة الختم
الموظفين النافذة الانتظار الطابور المكتب الهاتف الموقع الإلكتروني الحجز
المسبق الأحد الخميس الساعة الصباح المساء الرعايا المسافرين الطلاب المبتعثين""".split(),
    "politics": """الدولة الرئاسة البلد الحكومة البرلمان الانتخابات سياسي
السياسي الحزب المعارضة القرار المجلس الشعب الدستور السلطة الرئيس الوزراء
بالأمن والاستقرار الاستقرار الأمن رفضه واستنكاره ورفض استنكار البيان
وأوضح وأفاد المتحدث الرسمي صرح أعلن النواب الأغلبية التصويت الاستفتاء
الإصلاح القانون المحكمة القضاء الحريات الديمقراطية المرشح المرشحين الناخبين
الدائرة الائتلاف الأحزاب الكتلة الجلسة الطارئة الاستقالة التعديل الوزاري""".split(),
    "iraq": """العراقي العراقية العراق بغداد الشعب الحكومة الوزير القوات
المحافظة الموصل البصرة النفط الجنوب الشمال اللاجئين المجزرة الضحايا
الجرحى احتجاج المتظاهرين الانفجار السيارة المفخخة الشرطة الجيش الهجوم
المسلحين الحدود الأكراد كركوك الفلوجة النازحين المخيمات الإغاثة الطوارئ
المدنيين القتلى العنف التفجير الاحتلال الانسحاب""".split(),
    "sports": """الرياضة للرياضة الرياضيين الرياضي الرياض النادي الفريق فريق
منتخب المنتخب اللاعبين اللاعب المباراة البطولة الملعب المدرب الهدف الفوز
الدوري الكأس السباق الجولة الهلال النصر الاتحاد الأهلي الشباب الحارس
المرمى الشوط الدقيقة التعادل الخسارة النهائي المنافسة الجماهير التصفيات
الاتحادات الأولمبية الميدالية الذهبية العدائين السباحة""".split(),
    "economy": """الاقتصاد السوق النفط الأسعار التنمية التطوير الاستثمار
المشاريع البنك الميزانية مساعدات إعانات بمساعدات الدعم القطاع الشركات
الاستمرار للأجهزة الأجهزة التقنية الصناعة البورصة الأسهم المؤشر التداول
الريال الدولار التضخم النمو الصادرات الواردات التجارة الخصخصة القروض
الفائدة المالية الإنتاج البرميل أوبك الإيرادات العجز الفائض""".split(),
    "society": """والدين للشرع الشريعة الدين المسجد العلماء الإسلام الأسرة
التعليم المدارس الطلاب الجامعة أحمد حمد محمد الشيخ الخطبة الجمعة
السنوات الأعوام مساعد المستشفى الصحة الأطباء المرضى العلاج الدواء
الفتوى الفقه الحج العمرة مكة المدينة الصلاة الزكاة الصيام رمضان
الأطفال المرأة الشباب الثقافة المكتبة الكتاب المعلم""".split(),
}

# Which topics feed each category's documents.
CATEGORIES = {
    "sim": ["politics", "iraq", "sports", "economy", "society", "envoy"],
    "diff": ["politics", "mission", "envoy", "iraq", "economy", "sports"],
}

DIACRITIC_FORMS = {"الرياضة": "الرِّيَاضَة", "الدولة": "الدَّوْلَة", "محمد": "مُحَمَّد", "السياسي": "السياسـي"}
PUNCT = ["،", ".", "؛", "!", ":"]


def paragraph(rng, topic):
    words = TOPICS[topic]
    n = rng.randint(9, 18)
    out = []
    for i in range(n):
        w = rng.choice(words) if rng.random() < 0.8 else rng.choice(COMMON)
        w = DIACRITIC_FORMS.get(w, w) if rng.random() < 0.2 else w
        if rng.random() < 0.12:
            w += rng.choice(PUNCT)
        out.append(w)
    if rng.random() < 0.1:
        out.insert(rng.randrange(len(out)), str(rng.randint(1990, 2010)))
    return out


def wrap(words, rng):
    # Break a paragraph over a few lines so paragraphs are not single lines.
    lines, cur = [], []
    for w in words:
        cur.append(w)
        if len(cur) >= rng.randint(5, 9):
            lines.append(" ".join(cur))
            cur = []
    if cur:
        lines.append(" ".join(cur))
    return "\n".join(lines)


def document(rng, topics):
    # Each document cycles its topics so every topic word recurs.
    n = rng.randint(13, 19)
    order = [topics[i % len(topics)] for i in range(n)]
    rng.shuffle(order)
    blocks = [wrap(paragraph(rng, t), rng) for t in order]
    seps = ["\n\n", "\n\n\n", "\n \n"]
    text = blocks[0]
    for b in blocks[1:]:
        text += rng.choice(seps) + b
    return text + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "fixture"))
    args = ap.parse_args()
    rng = random.Random(SEED)
    root = pathlib.Path(args.out)
    for category, topics in CATEGORIES.items():
        (root / category).mkdir(parents=True, exist_ok=True)
        for i in range(6):
            # Rotate so each document leads with a different topic.
            doc_topics = topics[i:] + topics[:i]
            doc_topics = doc_topics[:4]
            path = root / category / f"{category}-{i + 1:02d}.txt"
            path.write_text(document(rng, doc_topics), encoding="utf-8")


if __name__ == "__main__":
    main()
