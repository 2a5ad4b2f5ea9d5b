import { Component, Injectable } from '@angular/core';
import { PageTitleService } from './page-title.service';

@Component({
  selector: 'app-course-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class CoursePageComponent {
  pageTitle = 'Course Page';
  constructor(private titles: PageTitleService) {}
  ngOnInit() {
    this.titles.initPage(this.pageTitle);
  }
}
