"""
枚举模块
同构意义下的有限半群枚举与规范形式
"""
