import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-report-view', template: `<p>{{ title }}</p>` })
export class ReportViewComponent { title = 'Report view'; }
